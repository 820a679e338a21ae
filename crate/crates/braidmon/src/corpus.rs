//! Factorizations shipped with the tool.

use braidmon_core::CuspidalFactorization;

use crate::format::parse_factorization;

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".bfac")))),*]
    };
}

/// `(name, file contents)` for every bundled example.
pub const ENTRIES: &[(&str, &str)] = bundled![
    "conic",
    "node_pair",
    "cuspidal_cubic",
    "cuspidal_cubic_scrambled",
    "smooth_cubic",
    "smooth_cubic_scrambled",
    "smooth_quartic",
    "smooth_sextic",
];

pub fn source(name: &str) -> Option<&'static str> {
    ENTRIES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Parses a bundled example. Panics on an unknown name.
pub fn load(name: &str) -> CuspidalFactorization {
    let text = source(name).unwrap_or_else(|| panic!("no bundled example named `{name}`"));
    parse_factorization(text).unwrap_or_else(|e| panic!("bundled `{name}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_parses_and_verifies() {
        for (name, _) in ENTRIES {
            assert!(load(name).verify_full_twist(), "{name}");
        }
    }
}
