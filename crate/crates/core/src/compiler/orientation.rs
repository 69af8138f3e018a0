use std::collections::VecDeque;
use std::fmt;

use crate::cube::Face;

/// Physical positions in the rig's frame. `Down` is the turnable layer.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Station {
    Up,
    Down,
    Front,
    Back,
    Left,
    Right,
}

impl Station {
    pub const ALL: [Station; 6] = [
        Station::Up,
        Station::Down,
        Station::Front,
        Station::Back,
        Station::Left,
        Station::Right,
    ];

    pub fn opposite(self) -> Station {
        match self {
            Station::Up => Station::Down,
            Station::Down => Station::Up,
            Station::Front => Station::Back,
            Station::Back => Station::Front,
            Station::Left => Station::Right,
            Station::Right => Station::Left,
        }
    }

    /// Unit vector, x to the right, y up, z towards the viewer.
    fn axis(self) -> [i8; 3] {
        match self {
            Station::Up => [0, 1, 0],
            Station::Down => [0, -1, 0],
            Station::Front => [0, 0, 1],
            Station::Back => [0, 0, -1],
            Station::Left => [-1, 0, 0],
            Station::Right => [1, 0, 0],
        }
    }

    /// Where a face sitting at this station ends up after one flip: the
    /// flipper tips the cube about the left-right axis so that
    /// Down -> Back -> Up -> Front -> Down.
    pub fn after_flip(self) -> Station {
        match self {
            Station::Down => Station::Back,
            Station::Back => Station::Up,
            Station::Up => Station::Front,
            Station::Front => Station::Down,
            s => s,
        }
    }

    /// Whole-cube quarter turn about the vertical axis, clockwise seen from
    /// above (same sense as a `U` turn): Front -> Left -> Back -> Right.
    pub fn after_rot_cw(self) -> Station {
        match self {
            Station::Front => Station::Left,
            Station::Left => Station::Back,
            Station::Back => Station::Right,
            Station::Right => Station::Front,
            s => s,
        }
    }

    pub fn after_rot_ccw(self) -> Station {
        match self {
            Station::Front => Station::Right,
            Station::Right => Station::Back,
            Station::Back => Station::Left,
            Station::Left => Station::Front,
            s => s,
        }
    }
}

/// Which station each logical face occupies, indexed by [`Face::index`].
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Orientation([Station; 6]);

impl Default for Orientation {
    fn default() -> Self {
        Orientation::IDENTITY
    }
}

impl Orientation {
    pub const IDENTITY: Orientation = Orientation([
        Station::Up,
        Station::Right,
        Station::Front,
        Station::Down,
        Station::Left,
        Station::Back,
    ]);

    /// Accepts only proper rotations of the cube.
    pub fn new(stations: [Station; 6]) -> Option<Orientation> {
        let o = Orientation(stations);
        o.is_valid().then_some(o)
    }

    pub fn station_of(&self, face: Face) -> Station {
        self.0[face.index()]
    }

    pub fn face_at(&self, station: Station) -> Face {
        let i = self.0.iter().position(|&s| s == station).expect("orientation is a bijection");
        Face::from_index(i)
    }

    fn map(&self, f: impl Fn(Station) -> Station) -> Orientation {
        Orientation(self.0.map(f))
    }

    pub fn flip(&self) -> Orientation {
        self.map(Station::after_flip)
    }

    pub fn rot_cw(&self) -> Orientation {
        self.map(Station::after_rot_cw)
    }

    pub fn rot_ccw(&self) -> Orientation {
        self.map(Station::after_rot_ccw)
    }

    /// Bijective, opposite faces on opposite stations, and right-handed:
    /// `R × U = F` as station vectors.
    pub fn is_valid(&self) -> bool {
        let mut seen = [false; 6];
        for s in self.0 {
            let i = Station::ALL.iter().position(|&x| x == s).unwrap();
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
        if Face::ALL
            .iter()
            .any(|&f| self.station_of(f.opposite()) != self.station_of(f).opposite())
        {
            return false;
        }
        let r = self.station_of(Face::R).axis();
        let u = self.station_of(Face::U).axis();
        let cross = [
            r[1] * u[2] - r[2] * u[1],
            r[2] * u[0] - r[0] * u[2],
            r[0] * u[1] - r[1] * u[0],
        ];
        cross == self.station_of(Face::F).axis()
    }

    /// The 24 orientations reachable with flips and rotations, in
    /// breadth-first order from the identity.
    pub fn all() -> Vec<Orientation> {
        let mut seen = vec![Orientation::IDENTITY];
        let mut queue = VecDeque::from([Orientation::IDENTITY]);
        while let Some(o) = queue.pop_front() {
            for next in [o.flip(), o.rot_cw(), o.rot_ccw()] {
                if !seen.contains(&next) {
                    seen.push(next);
                    queue.push_back(next);
                }
            }
        }
        seen
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> =
            Face::ALL.iter().map(|&face| format!("{face}:{:?}", self.station_of(face))).collect();
        write!(f, "Orientation({})", pairs.join(" "))
    }
}
