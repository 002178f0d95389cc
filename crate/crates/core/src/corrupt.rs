//! Deliberate single-point defects for negative controls.
//!
//! Each tag flips exactly one sign or one index in one structure map.
//! Running a suite under the matching tag must produce failures; this
//! is how we know the checks are not vacuous.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Corruption {
    /// Flip the sign of S(w[p,1]) in the dual.
    DualAntipodeSign,
    /// Flip the sign of the product w[p,1] w[q,0] in the dual.
    DualProductSign,
    /// Flip one sign inside the double's twist map.
    OreCommutationSign,
    /// Drop the identity-group term from the canonical two-leg element.
    DropWTerm,
    /// Conjugate by p^{-1} instead of p in the group crossing.
    CrossingIndex,
    /// Shift the cointegral index by one.
    CointegralShift,
    /// Negate the second-leg entries of the double's R on w[q,1].
    DoubleRSign,
    /// Use one extra power of the modular prefix in the grouplike
    /// comparison.
    DeltaExponent,
}

impl Corruption {
    pub const ALL: [Corruption; 8] = [
        Corruption::DualAntipodeSign,
        Corruption::DualProductSign,
        Corruption::OreCommutationSign,
        Corruption::DropWTerm,
        Corruption::CrossingIndex,
        Corruption::CointegralShift,
        Corruption::DoubleRSign,
        Corruption::DeltaExponent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Corruption::DualAntipodeSign => "dual-antipode-sign",
            Corruption::DualProductSign => "dual-product-sign",
            Corruption::OreCommutationSign => "ore-commutation-sign",
            Corruption::DropWTerm => "drop-w-term",
            Corruption::CrossingIndex => "crossing-index",
            Corruption::CointegralShift => "cointegral-shift",
            Corruption::DoubleRSign => "double-r-sign",
            Corruption::DeltaExponent => "delta-exponent",
        }
    }
}

impl fmt::Display for Corruption {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Corruption {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Corruption::ALL
            .iter()
            .copied()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Corruption::ALL.iter().map(|c| c.name()).collect();
                format!("unknown corruption tag '{s}', expected one of: {}", names.join(", "))
            })
    }
}

/// True when the tag targets the given instance/suite combination.
/// (Used to document which negative control exercises which suite.)
pub fn applies(c: Corruption, suite: &str) -> bool {
    match c {
        Corruption::DualAntipodeSign => matches!(suite, "mha-axioms" | "duality" | "qt-axioms"),
        Corruption::DualProductSign => matches!(suite, "mha-axioms" | "duality"),
        Corruption::OreCommutationSign => {
            matches!(
                suite,
                "double-relations"
                    | "mha-axioms"
                    | "qt-axioms"
                    | "yang-baxter"
                    | "u-tilde"
                    | "lemma-3-7-9"
                    | "grouplike-tilde"
            )
        }
        Corruption::DropWTerm => {
            matches!(
                suite,
                "thm-3-11-1" | "pi-qt-axioms" | "u-tilde" | "lemma-3-7-9" | "grouplike-tilde"
            )
        }
        Corruption::CrossingIndex => {
            matches!(
                suite,
                "pi-qt-axioms"
                    | "pi-yang-baxter"
                    | "u-tilde"
                    | "lemma-3-7-9"
                    | "grouplike-tilde"
                    | "thm-3-11-1"
            )
        }
        Corruption::CointegralShift => matches!(suite, "cointegral-lemmas"),
        Corruption::DoubleRSign => {
            matches!(
                suite,
                "qt-axioms"
                    | "yang-baxter"
                    | "inner-s2"
                    | "inner-s4"
                    | "u-tilde"
                    | "lemma-3-7-9"
                    | "grouplike-tilde"
            )
        }
        Corruption::DeltaExponent => matches!(suite, "prop-2-9"),
    }
}
