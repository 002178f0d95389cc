//! Suite registry and oracle preflight.
//!
//! This is the dispatch layer behind the command line: the fixed list
//! of suite names, the rule for which of the six packaged instances
//! carry each suite, and the oracle battery that must come back clean
//! before identity suites are allowed to claim a pass.  A suite that
//! does not apply to the selected instance reports `unsupported` with
//! a note pointing at the instance that carries it; it never passes
//! silently.

use std::str::FromStr;

use crate::axioms::check_mha_axioms;
use crate::cograded::{
    check_canonical_w, check_grouplike_tilde, check_intertwining, check_pi_qt_axioms,
    check_pi_yang_baxter, check_u_tilde, graded_group_functions, group_double, pi_trivial, PiQt,
};
use crate::corrupt::{applies, Corruption};
use crate::double::{check_double_relations, ore_double};
use crate::group::{cyclic, group_algebra, group_function_algebra, s3, trivial_r, FiniteGroup};
use crate::linalg::Idx;
use crate::mha::Multiplier;
use crate::oracle::{
    group_dense_oracle, ore_duality_oracle, ore_partial_sum_oracle, ore_twist_oracle,
};
use crate::ore::{dual_prefix_data, ore_algebra, ore_dual, ore_dual_qt};
use crate::pairing::{
    check_cointegral_lemmas, check_duality, group_alg_pair, group_fn_pair, ore_pair, DualPair,
};
use crate::quasitri::{
    check_inner_s2, check_inner_s4, check_modular_prefix, check_qt_axioms, check_yang_baxter,
    QtInstance,
};
use crate::report::{OracleReport, SuiteReport, SuiteRun};

/// The six instances the command line can select.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum InstanceKind {
    Ore,
    OreDual,
    OreDouble,
    GroupFn,
    GroupAlg,
    GroupDouble,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 6] = [
        InstanceKind::Ore,
        InstanceKind::OreDual,
        InstanceKind::OreDouble,
        InstanceKind::GroupFn,
        InstanceKind::GroupAlg,
        InstanceKind::GroupDouble,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Ore => "ore",
            InstanceKind::OreDual => "ore-dual",
            InstanceKind::OreDouble => "ore-double",
            InstanceKind::GroupFn => "group-fn",
            InstanceKind::GroupAlg => "group-alg",
            InstanceKind::GroupDouble => "group-double",
        }
    }

    /// One-line description for `list-instances`.
    pub fn describe(self) -> &'static str {
        match self {
            InstanceKind::Ore => "integral-side algebra on a, a^-1, b",
            InstanceKind::OreDual => "discrete-side algebra on the w[p,k] basis, carrying an R-matrix",
            InstanceKind::OreDouble => "double of ore-dual with ore under the twisted flip",
            InstanceKind::GroupFn => "functions on a finite group (set with --group)",
            InstanceKind::GroupAlg => "group algebra of a finite group (set with --group)",
            InstanceKind::GroupDouble => "crossed double built on a finite group (set with --group)",
        }
    }

    pub fn needs_group(self) -> bool {
        matches!(self, InstanceKind::GroupFn | InstanceKind::GroupAlg | InstanceKind::GroupDouble)
    }
}

impl FromStr for InstanceKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InstanceKind::ALL.iter().copied().find(|k| k.name() == s).ok_or_else(|| {
            let names: Vec<&str> = InstanceKind::ALL.iter().map(|k| k.name()).collect();
            format!("unknown instance '{s}', expected one of: {}", names.join(", "))
        })
    }
}

/// What `verify` runs against: an instance, a window radius, a sample
/// seed, and an optional deliberate defect.
#[derive(Clone)]
pub struct Selection {
    pub kind: InstanceKind,
    pub group: Option<FiniteGroup>,
    pub radius: u32,
    pub seed: u64,
    pub corrupt: Option<Corruption>,
}

impl Selection {
    pub fn new(kind: InstanceKind) -> Selection {
        Selection { kind, group: None, radius: 8, seed: 7, corrupt: None }
    }

    /// The group backing a group instance; S3 when none was given.
    pub fn group(&self) -> FiniteGroup {
        self.group.clone().unwrap_or_else(s3)
    }

    /// Report label: the instance name, with the group spelled out
    /// when one is in play.
    pub fn label(&self) -> String {
        if self.kind.needs_group() {
            format!("{}({})", self.kind.name(), self.group().label)
        } else {
            self.kind.name().to_string()
        }
    }
}

/// Parses a `--group` argument: `S3`, `Z<n>`, or `file:<path>` where
/// the file holds a multiplication table (a header line of element
/// names, then one row of products per element).
pub fn resolve_group(spec: &str) -> Result<FiniteGroup, String> {
    if spec.eq_ignore_ascii_case("s3") {
        return Ok(s3());
    }
    if let Some(rest) = spec.strip_prefix('Z').or_else(|| spec.strip_prefix('z')) {
        let n: usize = rest
            .parse()
            .map_err(|_| format!("bad cyclic order in '{spec}'; write Z4, Z6, ..."))?;
        if n == 0 {
            return Err("cyclic group order must be positive".into());
        }
        return Ok(cyclic(n));
    }
    if let Some(path) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let label = std::path::Path::new(path)
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("G")
            .to_string();
        return FiniteGroup::from_cayley(&label, &text);
    }
    Err(format!("unknown group '{spec}'; expected S3, Z<n>, or file:<path>"))
}

/// Every suite name the command line accepts, with what it checks.
pub const SUITES: [(&str, &str); 15] = [
    ("mha-axioms", "product, covered coproduct, counit, and antipode laws"),
    ("duality", "the evaluation pairing transports every structure map"),
    ("cointegral-lemmas", "cointegral absorption, shift, and reproduction identities"),
    ("qt-axioms", "R-matrix flip and leg rules"),
    ("yang-baxter", "the three-leg braid relation for R"),
    ("inner-s2", "the square of the antipode as conjugation by u"),
    ("inner-s4", "the fourth power of the antipode and the grouplike u S(u)^-1"),
    ("prop-2-9", "modular prefix law for second legs of R"),
    ("double-relations", "cross-commutation rules inside the double"),
    ("pi-qt-axioms", "crossing-deformed R-matrix laws"),
    ("pi-yang-baxter", "crossing-deformed braid relation"),
    ("u-tilde", "the crossed inner multiplier and its inverse"),
    ("lemma-3-7-9", "intertwining laws for the crossed inner multiplier"),
    ("grouplike-tilde", "the grouplike built from the crossed inner multiplier"),
    ("thm-3-11-1", "the canonical two-leg element of the group double"),
];

pub fn suite_known(name: &str) -> bool {
    SUITES.iter().any(|(n, _)| *n == name)
}

/// Independent-recomputation battery for the selected instance.  Ore
/// instances replay the structure constants through the pairing and
/// the partial-sum actions; group instances rebuild both sides
/// densely from the Cayley table.  The window is at least 8 whatever
/// the suite radius.
pub fn run_oracles(sel: &Selection) -> Vec<OracleReport> {
    let range = sel.radius.max(8);
    match sel.kind {
        InstanceKind::Ore | InstanceKind::OreDual => {
            let dual = ore_dual(sel.corrupt);
            vec![ore_duality_oracle(range, &dual), ore_partial_sum_oracle(range, &dual)]
        }
        InstanceKind::OreDouble => {
            let dual = ore_dual(sel.corrupt);
            let dd = ore_double(sel.corrupt);
            vec![
                ore_duality_oracle(range, &dual),
                ore_partial_sum_oracle(range, &dual),
                ore_twist_oracle(range, &dd.twist),
            ]
        }
        InstanceKind::GroupFn | InstanceKind::GroupAlg | InstanceKind::GroupDouble => {
            let g = sel.group();
            vec![group_dense_oracle(&g, &group_function_algebra(&g), &group_algebra(&g))]
        }
    }
}

/// Runs one suite against the selection.  Unknown names give `None`;
/// inapplicable instance and suite pairs report `unsupported`.
pub fn run_suite(sel: &Selection, name: &str) -> Option<SuiteReport> {
    if !suite_known(name) {
        return None;
    }
    let mut run = SuiteRun::new(name, &sel.label());
    if let Some(c) = sel.corrupt {
        if applies(c, name) {
            run.note(format!("negative control: running under '{c}'"));
        } else {
            run.note(format!("tag '{c}' does not target this suite"));
        }
    }
    dispatch(sel, name, &mut run);
    Some(run.finish())
}

fn is_abelian(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|i| (0..n).all(|j| g.mul(i, j) == g.mul(j, i)))
}

fn pair_suite<I: Idx, J: Idx>(
    pq: &DualPair<I, J>,
    name: &str,
    sel: &Selection,
    run: &mut SuiteRun,
) {
    match name {
        "duality" => check_duality(pq, sel.radius, sel.seed, run),
        "cointegral-lemmas" => check_cointegral_lemmas(pq, sel.radius, sel.seed, run),
        _ => unreachable!("not a pairing suite: {name}"),
    }
}

fn qt_suite<I: Idx>(qt: &QtInstance<I>, name: &str, sel: &Selection, run: &mut SuiteRun) {
    match name {
        "qt-axioms" => check_qt_axioms(qt, sel.radius, sel.seed, run),
        "yang-baxter" => check_yang_baxter(qt, sel.radius, sel.seed, run),
        "inner-s2" => check_inner_s2(qt, sel.radius, sel.seed, run),
        "inner-s4" => check_inner_s4(qt, sel.radius, sel.seed, run),
        _ => unreachable!("not a plain qt suite: {name}"),
    }
}

fn crossed_suite<I: Idx>(
    pq: &PiQt<I>,
    name: &str,
    sel: &Selection,
    run: &mut SuiteRun,
    expected_tilde: Option<&Multiplier<I>>,
) {
    match name {
        "pi-qt-axioms" => check_pi_qt_axioms(pq, sel.radius, sel.seed, run),
        "pi-yang-baxter" => check_pi_yang_baxter(pq, sel.radius, sel.seed, run),
        "u-tilde" => check_u_tilde(pq, sel.radius, sel.seed, run),
        "lemma-3-7-9" => check_intertwining(pq, sel.radius, sel.seed, run),
        "grouplike-tilde" => check_grouplike_tilde(pq, sel.radius, sel.seed, run, expected_tilde),
        _ => unreachable!("not a crossed suite: {name}"),
    }
}

fn dispatch(sel: &Selection, name: &str, run: &mut SuiteRun) {
    use InstanceKind::*;
    match name {
        "mha-axioms" => match sel.kind {
            Ore => check_mha_axioms(&ore_algebra(), sel.radius, sel.seed, run),
            OreDual => check_mha_axioms(&ore_dual(sel.corrupt), sel.radius, sel.seed, run),
            OreDouble => {
                check_mha_axioms(&ore_double(sel.corrupt).qt.inst, sel.radius, sel.seed, run)
            }
            GroupFn => {
                check_mha_axioms(&group_function_algebra(&sel.group()), sel.radius, sel.seed, run)
            }
            GroupAlg => check_mha_axioms(&group_algebra(&sel.group()), sel.radius, sel.seed, run),
            GroupDouble => check_mha_axioms(
                &group_double(&sel.group(), sel.corrupt).qt.inst,
                sel.radius,
                sel.seed,
                run,
            ),
        },
        "duality" | "cointegral-lemmas" => match sel.kind {
            OreDual => pair_suite(&ore_pair(sel.corrupt), name, sel, run),
            GroupFn => pair_suite(&group_fn_pair(&sel.group()), name, sel, run),
            GroupAlg => pair_suite(&group_alg_pair(&sel.group()), name, sel, run),
            Ore => run.mark_unsupported(
                "the evaluation pair is anchored at the discrete side; select ore-dual",
            ),
            OreDouble | GroupDouble => {
                run.mark_unsupported("no evaluation pair is declared for a double")
            }
        },
        "qt-axioms" | "yang-baxter" | "inner-s2" | "inner-s4" => match sel.kind {
            Ore => run.mark_unsupported(
                "no R-matrix is declared on the integral side; select ore-dual",
            ),
            OreDual => qt_suite(&ore_dual_qt(sel.corrupt), name, sel, run),
            OreDouble => qt_suite(&ore_double(sel.corrupt).qt, name, sel, run),
            GroupFn => {
                let g = sel.group();
                if is_abelian(&g) {
                    let qt = QtInstance { inst: group_function_algebra(&g), r: trivial_r() };
                    qt_suite(&qt, name, sel, run);
                } else {
                    run.mark_unsupported(format!(
                        "the trivial R needs a cocommutative coproduct and {} is non-abelian; \
                         run the pi- suites instead",
                        g.label
                    ));
                }
            }
            GroupAlg => {
                let qt = QtInstance { inst: group_algebra(&sel.group()), r: trivial_r() };
                qt_suite(&qt, name, sel, run);
            }
            GroupDouble => {
                let g = sel.group();
                if is_abelian(&g) {
                    qt_suite(&group_double(&g, sel.corrupt).qt, name, sel, run);
                } else {
                    run.mark_unsupported(format!(
                        "the double of {} is quasitriangular in the crossed sense; \
                         run the pi- suites",
                        g.label
                    ));
                }
            }
        },
        "prop-2-9" => match sel.kind {
            OreDual => {
                let shift = if sel.corrupt == Some(Corruption::DeltaExponent) { 1 } else { 0 };
                check_modular_prefix(
                    &ore_dual_qt(sel.corrupt),
                    Some(dual_prefix_data(shift)),
                    sel.radius,
                    run,
                );
            }
            OreDouble => check_modular_prefix(&ore_double(sel.corrupt).qt, None, sel.radius, run),
            _ => run.mark_unsupported(
                "the modular prefix law is checked against the closed pairing on ore-dual",
            ),
        },
        "double-relations" => match sel.kind {
            OreDouble => check_double_relations(&ore_double(sel.corrupt), sel.radius, run),
            _ => run.mark_unsupported("the cross-commutation table lives on ore-double"),
        },
        "pi-qt-axioms" | "pi-yang-baxter" | "u-tilde" | "lemma-3-7-9" | "grouplike-tilde" => {
            match sel.kind {
                Ore => run.mark_unsupported(
                    "no R-matrix is declared on the integral side; select ore-dual",
                ),
                OreDual => {
                    crossed_suite(&pi_trivial(ore_dual_qt(sel.corrupt)), name, sel, run, None)
                }
                OreDouble => {
                    crossed_suite(&pi_trivial(ore_double(sel.corrupt).qt), name, sel, run, None)
                }
                GroupFn => {
                    // Conjugation crossing on functions: lawful for
                    // every group, abelian or not.
                    let id = Multiplier::identity();
                    crossed_suite(
                        &graded_group_functions(&sel.group(), sel.corrupt),
                        name,
                        sel,
                        run,
                        Some(&id),
                    );
                }
                GroupAlg => {
                    let id = Multiplier::identity();
                    let qt = QtInstance { inst: group_algebra(&sel.group()), r: trivial_r() };
                    crossed_suite(&pi_trivial(qt), name, sel, run, Some(&id));
                }
                GroupDouble => {
                    let id = Multiplier::identity();
                    crossed_suite(
                        &group_double(&sel.group(), sel.corrupt),
                        name,
                        sel,
                        run,
                        Some(&id),
                    );
                }
            }
        }
        "thm-3-11-1" => match sel.kind {
            GroupDouble => check_canonical_w(&group_double(&sel.group(), sel.corrupt), run),
            _ => run.mark_unsupported(
                "the canonical two-leg element is assembled from a group double basis; \
                 select group-double",
            ),
        },
        _ => unreachable!("unknown suite {name} passed the registry filter"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    fn sel(kind: InstanceKind) -> Selection {
        Selection { kind, group: Some(cyclic(3)), radius: 3, seed: 7, corrupt: None }
    }

    #[test]
    fn registry_names_are_unique_and_guarded() {
        let mut names: Vec<&str> = SUITES.iter().map(|(n, _)| *n).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), SUITES.len());
        assert!(suite_known("yang-baxter"));
        assert!(!suite_known("qt"));
        assert!(run_suite(&sel(InstanceKind::Ore), "no-such-suite").is_none());
    }

    #[test]
    fn no_suite_fails_on_a_clean_selection() {
        // Smoke pass over the whole applicability matrix at a small
        // radius; the group instances run on Z3 to stay quick.
        for kind in InstanceKind::ALL {
            let mut s = sel(kind);
            s.radius = 2;
            for (name, _) in SUITES {
                let rep = run_suite(&s, name).unwrap();
                assert!(
                    !matches!(rep.status, Status::Fail),
                    "{} on {} failed: {:?}",
                    name,
                    s.label(),
                    rep.notes
                );
            }
        }
    }

    #[test]
    fn unsupported_pairs_point_at_the_carrying_instance() {
        let rep = run_suite(&sel(InstanceKind::Ore), "duality").unwrap();
        assert!(matches!(rep.status, Status::Unsupported));
        let rep = run_suite(&sel(InstanceKind::OreDual), "thm-3-11-1").unwrap();
        assert!(matches!(rep.status, Status::Unsupported));

        let mut s = sel(InstanceKind::GroupFn);
        s.group = Some(s3());
        let rep = run_suite(&s, "qt-axioms").unwrap();
        assert!(matches!(rep.status, Status::Unsupported));

        let mut sd = sel(InstanceKind::GroupDouble);
        sd.group = Some(s3());
        sd.radius = 2;
        let rep = run_suite(&sd, "yang-baxter").unwrap();
        assert!(matches!(rep.status, Status::Unsupported));
        // An abelian double also carries the plain suite.
        sd.group = Some(cyclic(4));
        let rep = run_suite(&sd, "qt-axioms").unwrap();
        assert!(matches!(rep.status, Status::Pass), "{:?}", rep.notes);
    }

    #[test]
    fn negative_controls_fail_their_target_suites() {
        let mut s = sel(InstanceKind::OreDual);
        s.corrupt = Some(Corruption::DeltaExponent);
        assert!(matches!(run_suite(&s, "prop-2-9").unwrap().status, Status::Fail));

        let mut d = sel(InstanceKind::GroupDouble);
        d.group = Some(s3());
        d.radius = 2;
        d.corrupt = Some(Corruption::CrossingIndex);
        assert!(matches!(run_suite(&d, "pi-qt-axioms").unwrap().status, Status::Fail));
    }

    #[test]
    fn oracle_preflight_gates_on_table_defects() {
        let clean = run_oracles(&sel(InstanceKind::OreDual));
        assert!(crate::oracle::gate(&clean));

        let mut s = sel(InstanceKind::OreDual);
        s.corrupt = Some(Corruption::DualProductSign);
        let bad = run_oracles(&s);
        assert!(!crate::oracle::gate(&bad));
    }

    #[test]
    fn group_specs_resolve() {
        assert_eq!(resolve_group("Z4").unwrap().order(), 4);
        assert_eq!(resolve_group("S3").unwrap().label, "S3");
        assert!(resolve_group("Z0").is_err());
        assert!(resolve_group("Q8").is_err());

        let path = std::env::temp_dir().join("klein-four.txt");
        std::fs::write(&path, "e x y z\ne x y z\nx e z y\ny z e x\nz y x e\n").unwrap();
        let g = resolve_group(&format!("file:{}", path.display())).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.label, "klein-four");
    }
}
