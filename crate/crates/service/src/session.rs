//! Step-mode sessions: a base state, the user's own moves, and the solver's
//! continuation from there, with a playback cursor over both.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use cuberig::cube::{CubieState, MoveSequence};

use crate::engine::{facelets, Engine};
use crate::error::Rejection;

pub const DEFAULT_CAPACITY: usize = 64;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Next,
    Prev,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Session {
    pub id: String,
    pub base_state: CubieState,
    pub user_moves: MoveSequence,
    pub solution: MoveSequence,
    pub cursor: usize,
    pub created_ms: u64,
    pub updated_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub base_state: String,
    /// State after the first `cursor` moves of user moves then solution.
    pub state: String,
    pub user_moves: String,
    pub solution: String,
    /// Compact forms, e.g. `LUD'` and `D2R'F`.
    pub user_display: String,
    pub solution_display: String,
    pub cursor: usize,
    pub total_moves: usize,
    pub created_ms: u64,
    pub updated_ms: u64,
}

fn now_ms() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_millis() as u64)
}

impl Session {
    pub fn total_moves(&self) -> usize {
        self.user_moves.len() + self.solution.len()
    }

    pub fn state_at_cursor(&self) -> CubieState {
        let moves = self.user_moves.iter().chain(self.solution.iter()).take(self.cursor);
        self.base_state.apply_sequence(moves)
    }

    pub fn view(&self) -> SessionView {
        SessionView {
            id: self.id.clone(),
            base_state: facelets(&self.base_state),
            state: facelets(&self.state_at_cursor()),
            user_moves: self.user_moves.to_string(),
            solution: self.solution.to_string(),
            user_display: self.user_moves.compact(),
            solution_display: self.solution.compact(),
            cursor: self.cursor,
            total_moves: self.total_moves(),
            created_ms: self.created_ms,
            updated_ms: self.updated_ms,
        }
    }

    /// Appends user moves and re-solves from the resulting state. Only
    /// allowed with the cursor exactly at the end of the user moves.
    pub fn user_moves(&mut self, moves: &MoveSequence, engine: &Engine) -> Result<(), Rejection> {
        if self.cursor != self.user_moves.len() {
            return Err(Rejection::MoveNotAllowedMidPlayback);
        }
        let mut user = self.user_moves.clone();
        for &m in moves {
            user.push(m);
        }
        let after = self.base_state.apply_sequence(user.iter());
        self.solution = engine.solve(&after)?;
        self.cursor = user.len();
        self.user_moves = user;
        self.updated_ms = now_ms();
        Ok(())
    }

    /// Moves the cursor one step; a no-op at either end.
    pub fn step(&mut self, dir: Direction) {
        match dir {
            Direction::Next if self.cursor < self.total_moves() => self.cursor += 1,
            Direction::Prev if self.cursor > 0 => self.cursor -= 1,
            _ => return,
        }
        self.updated_ms = now_ms();
    }
}

struct Inner {
    sessions: HashMap<String, Arc<Mutex<Session>>>,
    order: VecDeque<String>,
    created: u64,
}

/// In-memory sessions, oldest evicted beyond `capacity`. Each session has
/// its own lock so mutations of one session are serialized.
pub struct SessionStore {
    inner: Mutex<Inner>,
    capacity: usize,
}

impl Default for SessionStore {
    fn default() -> Self {
        SessionStore::new(DEFAULT_CAPACITY)
    }
}

/// Ids are a fixed bijective scramble of the creation counter.
fn session_id(n: u64) -> String {
    let mut z = n.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    format!("{:016x}", z ^ (z >> 31))
}

impl SessionStore {
    pub fn new(capacity: usize) -> Self {
        SessionStore {
            inner: Mutex::new(Inner {
                sessions: HashMap::new(),
                order: VecDeque::new(),
                created: 0,
            }),
            capacity: capacity.max(1),
        }
    }

    pub fn create(&self, base_state: CubieState, engine: &Engine) -> Result<SessionView, Rejection> {
        let solution = engine.solve(&base_state)?;
        let mut inner = self.inner.lock().unwrap();
        let id = session_id(inner.created);
        inner.created += 1;
        let now = now_ms();
        let session = Session {
            id: id.clone(),
            base_state,
            user_moves: MoveSequence::default(),
            solution,
            cursor: 0,
            created_ms: now,
            updated_ms: now,
        };
        let view = session.view();
        inner.sessions.insert(id.clone(), Arc::new(Mutex::new(session)));
        inner.order.push_back(id);
        while inner.order.len() > self.capacity {
            let oldest = inner.order.pop_front().unwrap();
            inner.sessions.remove(&oldest);
        }
        Ok(view)
    }

    pub fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, Rejection> {
        let inner = self.inner.lock().unwrap();
        inner.sessions.get(id).cloned().ok_or_else(|| Rejection::UnknownSession(id.to_string()))
    }

    pub fn len(&self) -> usize {
        self.inner.lock().unwrap().sessions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
