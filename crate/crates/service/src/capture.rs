use std::collections::BTreeMap;

use serde::Serialize;

use cuberig::cube::Face;

use crate::error::Rejection;

/// Face strings as they arrive from the detector, keyed by center.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FaceCapture {
    faces: [Option<String>; 6],
    order: Vec<Face>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaptureView {
    pub faces: BTreeMap<char, String>,
    pub order: Vec<char>,
    pub complete: bool,
}

fn check_face(s: &str) -> Result<Face, Rejection> {
    let chars: Vec<char> = s.chars().collect();
    if chars.len() != 9 || chars.iter().any(|&c| Face::from_char(c).is_none()) {
        return Err(Rejection::BadFaceString);
    }
    Ok(Face::from_char(chars[4]).unwrap())
}

impl FaceCapture {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores `s` under its center, replacing any earlier capture of it.
    pub fn ingest_face(&mut self, s: &str) -> Result<Face, Rejection> {
        let face = check_face(s)?;
        self.faces[face.index()] = Some(s.to_string());
        self.order.retain(|&f| f != face);
        self.order.push(face);
        Ok(face)
    }

    /// All-or-nothing ingestion of several faces.
    pub fn ingest_batch<S: AsRef<str>>(&mut self, faces: &[S]) -> Result<(), Rejection> {
        let mut claimed: [Option<&str>; 6] = [None; 6];
        for s in faces {
            let s = s.as_ref();
            let face = check_face(s)?;
            match claimed[face.index()] {
                Some(other) if other != s => return Err(Rejection::DuplicateCenterConflict(face.as_char())),
                _ => claimed[face.index()] = Some(s),
            }
        }
        for s in faces {
            self.ingest_face(s.as_ref())?;
        }
        Ok(())
    }

    pub fn get(&self, face: Face) -> Option<&str> {
        self.faces[face.index()].as_deref()
    }

    pub fn order(&self) -> &[Face] {
        &self.order
    }

    pub fn missing(&self) -> Vec<Face> {
        Face::ALL.into_iter().filter(|f| self.faces[f.index()].is_none()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.faces.iter().all(Option::is_some)
    }

    /// The 54-character state in `U R F D L B` order, once all six faces are in.
    pub fn assemble(&self) -> Result<String, Rejection> {
        let missing = self.missing();
        if !missing.is_empty() {
            let names: Vec<String> = missing.iter().map(|f| f.to_string()).collect();
            return Err(Rejection::IncompleteCapture(names.join(" ")));
        }
        Ok(self.faces.iter().flatten().map(String::as_str).collect())
    }

    pub fn clear(&mut self) {
        *self = Self::default();
    }

    pub fn view(&self) -> CaptureView {
        CaptureView {
            faces: Face::ALL
                .into_iter()
                .filter_map(|f| self.get(f).map(|s| (f.as_char(), s.to_string())))
                .collect(),
            order: self.order.iter().map(|f| f.as_char()).collect(),
            complete: self.is_complete(),
        }
    }
}
