//! Builtin arrangements and input resolution.

use std::path::Path;

use crate::error::{Error, Result};
use crate::om::io::{parse_input, Parsed};
use crate::om::Arrangement;

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub description: &'static str,
    normals: &'static [&'static [i64]],
    /// Expected tope count and Betti numbers.
    pub expected_topes: usize,
    pub expected_betti: &'static [usize],
}

impl CorpusEntry {
    pub fn arrangement(&self) -> Arrangement {
        Arrangement::from_integers(self.normals)
    }

    pub fn load(&self) -> Parsed {
        let arrangement = self.arrangement();
        Parsed {
            matroid: arrangement
                .oriented_matroid()
                .expect("builtin arrangements are valid"),
            arrangement: Some(arrangement),
        }
    }
}

// The normals of u23 fix the sign conventions behind the tope letters A–F.
pub const CORPUS: &[CorpusEntry] = &[
    CorpusEntry {
        name: "u11",
        description: "one hyperplane in Q^1",
        normals: &[&[1]],
        expected_topes: 2,
        expected_betti: &[1, 1],
    },
    CorpusEntry {
        name: "u22",
        description: "two coordinate lines in Q^2",
        normals: &[&[1, 0], &[0, 1]],
        expected_topes: 4,
        expected_betti: &[1, 2, 1],
    },
    CorpusEntry {
        name: "u23",
        description: "three lines through the origin in Q^2",
        normals: &[&[1, 0], &[0, 1], &[-1, 1]],
        expected_topes: 6,
        expected_betti: &[1, 3, 2],
    },
    CorpusEntry {
        name: "u34",
        description: "four generic planes through the origin in Q^3",
        normals: &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]],
        expected_topes: 14,
        expected_betti: &[1, 4, 6, 3],
    },
    CorpusEntry {
        name: "a3",
        description: "braid arrangement x_i = x_j in Q^4",
        normals: &[
            &[1, -1, 0, 0],
            &[1, 0, -1, 0],
            &[1, 0, 0, -1],
            &[0, 1, -1, 0],
            &[0, 1, 0, -1],
            &[0, 0, 1, -1],
        ],
        expected_topes: 24,
        expected_betti: &[1, 6, 11, 6],
    },
];

pub fn builtin(name: &str) -> Option<&'static CorpusEntry> {
    CORPUS.iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

pub fn builtin_names() -> Vec<&'static str> {
    CORPUS.iter().map(|e| e.name).collect()
}

/// Resolves a builtin name or reads an input file.
pub fn load(input: &str) -> Result<(String, Parsed)> {
    if let Some(e) = builtin(input) {
        return Ok((e.name.to_string(), e.load()));
    }
    let path = Path::new(input);
    if !path.exists() {
        return Err(Error::UnknownInput(format!(
            "{input} (not a file; builtins are {})",
            builtin_names().join(", ")
        )));
    }
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .map_or_else(|| input.to_string(), |s| s.to_string_lossy().into_owned());
    Ok((name, parse_input(&text)?))
}
