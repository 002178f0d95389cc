//! The double of the Laurent pair: the dual algebra glued to the
//! original one along a twist that moves algebra elements past dual
//! elements.  The twist is built from the two hit actions and the
//! inverse antipode,
//!
//! ```text
//!   T(x (x) g) = sum hitL(hitR(g, x_(1)), Sinv(x_(3))) (x) x_(2),
//! ```
//!
//! and the product of the glued algebra is
//! (f >< x)(g >< y) = sum (f . T1) >< (T2 . y).  The first factor is
//! non-unital, so the double carries local units instead of a unit.
//!
//! The R-matrix of the double is the formal sum over the matched
//! bases, sum_p w[p,k] >< 1 (x) 1 >< a^p b^k.  Its first-leg covers
//! are finite because dual basis elements multiply to delta-matched
//! sums; second legs are 1 >< z factors, which act through the twist
//! and are carried as operator entries.

use crate::corrupt::Corruption;
use crate::linalg::{Elem, Tensor2};
use crate::mha::{MhaInstance, MulEntry, Multiplier, OpMul, TwoLegMultiplier};
use crate::ore::{fmt_dual, fmt_ore, hit_left, hit_right, ore_algebra, ore_dual, DualIdx, OreIdx};
use crate::quasitri::QtInstance;
use crate::report::SuiteRun;
use crate::scalar::Scalar;
use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

pub type DoubleIdx = (DualIdx, OreIdx);

/// x (x) g |-> sum of first-factor (x) second-factor terms.
pub type Twist =
    Arc<dyn Fn(&Elem<OreIdx>, &Elem<DualIdx>) -> Tensor2<DualIdx, OreIdx> + Send + Sync>;

/// The assembled double, with handles to its two sides and the twist.
pub struct OreDouble {
    pub qt: QtInstance<DoubleIdx>,
    pub a: Arc<MhaInstance<OreIdx>>,
    pub ahat: Arc<MhaInstance<DualIdx>>,
    pub twist: Twist,
}

struct Memo<K: Ord + Clone, V: Clone> {
    map: Mutex<BTreeMap<K, V>>,
}

impl<K: Ord + Clone, V: Clone> Memo<K, V> {
    fn new() -> Self {
        Memo { map: Mutex::new(BTreeMap::new()) }
    }

    fn get_or(&self, k: K, f: impl FnOnce() -> V) -> V {
        if let Some(v) = self.map.lock().unwrap().get(&k) {
            return v.clone();
        }
        let v = f();
        self.map.lock().unwrap().insert(k, v.clone());
        v
    }
}

fn sweedler3(a: &MhaInstance<OreIdx>, i: &OreIdx) -> Vec<(OreIdx, OreIdx, OreIdx, Scalar)> {
    let full = a.full_coproduct.as_ref().expect("full coproduct");
    let mut out = Vec::new();
    for ((x1, r), c1) in full(i).terms() {
        for ((x2, x3), c2) in full(r).terms() {
            out.push((*x1, *x2, *x3, c1.clone() * c2.clone()));
        }
    }
    out
}

fn sweedler4(a: &MhaInstance<OreIdx>, i: &OreIdx) -> Vec<([OreIdx; 4], Scalar)> {
    let full = a.full_coproduct.as_ref().expect("full coproduct");
    let mut out = Vec::new();
    for ((x1, r), c1) in full(i).terms() {
        for (x2, x3, x4, c2) in sweedler3(a, r) {
            out.push(([*x1, x2, x3, x4], c1.clone() * c2));
        }
    }
    out
}

/// The crossing twist.  The corrupted variant flips the sign of the
/// odd dual component coming out of the left hit, which is the single
/// sign making b cross w[p,1] correctly.
pub fn ore_twist(a: Arc<MhaInstance<OreIdx>>, corrupt_sign: bool) -> Twist {
    Arc::new(move |x: &Elem<OreIdx>, g: &Elem<DualIdx>| {
        let mut out = Elem::zero();
        for (i, c) in x.terms() {
            for (x1, x2, x3, c2) in sweedler3(&a, i) {
                let s3 = a.antipode_inv_e(&Elem::basis(x3));
                let hr = hit_right(g, &Elem::basis(x1));
                let mut f = hit_left(&hr, &s3);
                if corrupt_sign {
                    f = f.map(|&(p, n)| {
                        let e: Elem<DualIdx> = Elem::basis((p, n));
                        if n == 1 {
                            e.neg()
                        } else {
                            e
                        }
                    });
                }
                out.add_assign(&f.tensor(&Elem::basis(x2)).scale(&(c.clone() * c2)));
            }
        }
        out
    })
}

/// (1 >< z) . w through the twist.
pub fn one_box_left(
    a: &MhaInstance<OreIdx>,
    twist: &Twist,
    z: &Elem<OreIdx>,
    w: &Elem<DoubleIdx>,
) -> Elem<DoubleIdx> {
    let mut out = Elem::zero();
    for ((g, y), c) in w.terms() {
        let t = twist(z, &Elem::basis(*g));
        for ((tl, tr), c2) in t.terms() {
            let ypart = a.mul(&Elem::basis(*tr), &Elem::basis(*y));
            for (yy, cy) in ypart.terms() {
                out.add_term((*tl, *yy), c.clone() * c2.clone() * cy.clone());
            }
        }
    }
    out
}

/// w . (1 >< z): the second factor just multiplies on the right.
pub fn one_box_right(
    a: &MhaInstance<OreIdx>,
    z: &Elem<OreIdx>,
    w: &Elem<DoubleIdx>,
) -> Elem<DoubleIdx> {
    let mut out = Elem::zero();
    for ((g, y), c) in w.terms() {
        let ypart = a.mul(&Elem::basis(*y), z);
        for (yy, cy) in ypart.terms() {
            out.add_term((*g, *yy), c.clone() * cy.clone());
        }
    }
    out
}

/// The multiplier 1 >< z of the double, as an operator entry.  The
/// family is closed under the antipode: S(1 >< z) = 1 >< Sinv(z)
/// because the second factor carries the opposite coproduct.
pub fn one_box(a: &Arc<MhaInstance<OreIdx>>, twist: &Twist, z: Elem<OreIdx>) -> OpMul<DoubleIdx> {
    let (a1, t1, z1) = (a.clone(), twist.clone(), z.clone());
    let (a2, z2) = (a.clone(), z.clone());
    let (a3, t3, z3) = (a.clone(), twist.clone(), z.clone());
    let (a4, t4, z4) = (a.clone(), twist.clone(), z.clone());
    let (a5, t5, z5) = (a.clone(), twist.clone(), z.clone());
    OpMul {
        tag: format!("1><{}", a.render(&z)),
        left: Arc::new(move |w| one_box_left(&a1, &t1, &z1, w)),
        right: Arc::new(move |w| one_box_right(&a2, &z2, w)),
        counit: a.counit_e(&z),
        coprod: Arc::new(move |u, v| {
            // Delta(1 >< z)(u (x) v) = sum (1 >< z_(2)) u (x) (1 >< z_(1)) v.
            let full = a3.full_coproduct.as_ref().expect("full coproduct");
            let mut out = Elem::zero();
            for (i, c) in z3.terms() {
                for ((za, zb), c2) in full(i).terms() {
                    let lu = one_box_left(&a3, &t3, &Elem::basis(*zb), u);
                    let lv = one_box_left(&a3, &t3, &Elem::basis(*za), v);
                    out.add_assign(&lu.tensor(&lv).scale(&(c.clone() * c2.clone())));
                }
            }
            out
        }),
        antipode: Arc::new(move || one_box(&a4, &t4, a4.antipode_inv_e(&z4))),
        antipode_inv: Arc::new(move || one_box(&a5, &t5, a5.antipode_e(&z5))),
    }
}

/// Builds the double.  Corruptions of the dual side flow through to
/// the first factor; the crossing corruption flips the odd-hit sign in
/// the twist; the R corruption is applied separately when the R-matrix
/// is built.
pub fn ore_double(corrupt: Option<Corruption>) -> OreDouble {
    let a = ore_algebra();
    let ahat = ore_dual(corrupt);
    let twist = ore_twist(a.clone(), corrupt == Some(Corruption::OreCommutationSign));

    let prod_memo: Arc<Memo<(DoubleIdx, DoubleIdx), Elem<DoubleIdx>>> = Arc::new(Memo::new());
    let (pa, pahat, ptwist) = (a.clone(), ahat.clone(), twist.clone());
    let product = Arc::new(move |i: &DoubleIdx, j: &DoubleIdx| -> Elem<DoubleIdx> {
        let (i, j) = (*i, *j);
        prod_memo.get_or((i, j), || {
            let ((fi, xi), (gj, yj)) = (i, j);
            let t = ptwist(&Elem::basis(xi), &Elem::basis(gj));
            let mut out = Elem::zero();
            for ((tl, tr), c) in t.terms() {
                let fpart = pahat.mul(&Elem::basis(fi), &Elem::basis(*tl));
                let ypart = pa.mul(&Elem::basis(*tr), &Elem::basis(yj));
                for (p, cp) in fpart.terms() {
                    for (q, cq) in ypart.terms() {
                        out.add_term((*p, *q), c.clone() * cp.clone() * cq.clone());
                    }
                }
            }
            out
        })
    });

    let covr_memo: Arc<Memo<(DoubleIdx, DoubleIdx), Tensor2<DoubleIdx, DoubleIdx>>> =
        Arc::new(Memo::new());
    let (ca, cahat) = (a.clone(), ahat.clone());
    let cov_right = Arc::new(move |i: &DoubleIdx, j: &DoubleIdx| {
        let (i, j) = (*i, *j);
        covr_memo.get_or((i, j), || {
            let ((f, x), (g, y)) = (i, j);
            let mut out = Elem::zero();
            for ([x1, x2, x3, x4], c) in sweedler4(&ca, &x) {
                let s3 = ca.antipode_inv_e(&Elem::basis(x3));
                let gp = hit_left(&hit_right(&Elem::basis(g), &Elem::basis(x1)), &s3);
                if gp.is_zero() {
                    continue;
                }
                let w = cahat.cov_right_e(&Elem::basis(f), &gp);
                let x2y = ca.mul(&Elem::basis(x2), &Elem::basis(y));
                for ((s, t), c2) in w.terms() {
                    for (yy, cy) in x2y.terms() {
                        out.add_term(
                            ((*s, x4), (*t, *yy)),
                            c.clone() * c2.clone() * cy.clone(),
                        );
                    }
                }
            }
            out
        })
    });

    let covl_memo: Arc<Memo<(DoubleIdx, DoubleIdx), Tensor2<DoubleIdx, DoubleIdx>>> =
        Arc::new(Memo::new());
    let (la, lahat) = (a.clone(), ahat.clone());
    let cov_left = Arc::new(move |j: &DoubleIdx, i: &DoubleIdx| {
        let (j, i) = (*j, *i);
        covl_memo.get_or((j, i), || {
            let ((g, y), (f, x)) = (j, i);
            let full = la.full_coproduct.as_ref().expect("full coproduct");
            let mut out = Elem::zero();
            for ((xa, xb), c1) in full(&x).terms() {
                for (y1, y2, y3, c2) in sweedler3(&la, &y) {
                    let fcut = hit_left(
                        &Elem::basis(f),
                        &la.antipode_inv_e(&Elem::basis(y3)),
                    );
                    if fcut.is_zero() {
                        continue;
                    }
                    let w = lahat.cov_left_e(&Elem::basis(g), &fcut);
                    let y2xb = la.mul(&Elem::basis(y2), &Elem::basis(*xb));
                    for ((s, t), c3) in w.terms() {
                        let th = hit_left(&Elem::basis(*t), &Elem::basis(y1));
                        for (tt, c4) in th.terms() {
                            for (oo, c5) in y2xb.terms() {
                                out.add_term(
                                    ((*s, *oo), (*tt, *xa)),
                                    c1.clone() * c2.clone() * c3.clone() * c4.clone() * c5.clone(),
                                );
                            }
                        }
                    }
                }
            }
            out
        })
    });

    let (ea, eahat) = (a.clone(), ahat.clone());
    let counit =
        Arc::new(move |i: &DoubleIdx| (eahat.counit)(&i.0) * (ea.counit)(&i.1));

    let ant_memo: Arc<Memo<DoubleIdx, Elem<DoubleIdx>>> = Arc::new(Memo::new());
    let (sa, sahat, st) = (a.clone(), ahat.clone(), twist.clone());
    let antipode = Arc::new(move |i: &DoubleIdx| {
        let i = *i;
        ant_memo.get_or(i, || {
            let (f, x) = i;
            st(&sa.antipode_inv_e(&Elem::basis(x)), &sahat.antipode_e(&Elem::basis(f)))
        })
    });
    let anti_memo: Arc<Memo<DoubleIdx, Elem<DoubleIdx>>> = Arc::new(Memo::new());
    let (ia, iahat, it) = (a.clone(), ahat.clone(), twist.clone());
    let antipode_inv = Arc::new(move |i: &DoubleIdx| {
        let i = *i;
        anti_memo.get_or(i, || {
            let (f, x) = i;
            it(&ia.antipode_e(&Elem::basis(x)), &iahat.antipode_inv_e(&Elem::basis(f)))
        })
    });

    let window = Arc::new(move |r: u32| {
        let r = r as i64;
        let mut out = Vec::new();
        for p in -r..=r {
            for n in 0..=1u8 {
                for m in -r..=r {
                    for q in 0..=1u8 {
                        out.push(((p, n), (m, q)));
                    }
                }
            }
        }
        out
    });

    let local_unit = Arc::new(move |span: &[DoubleIdx]| {
        let reach = span
            .iter()
            .map(|((p, _), (m, q))| p.abs() + m.abs() + *q as i64 + 2)
            .max()
            .unwrap_or(2);
        let mut e = Elem::zero();
        for t in -reach..=reach {
            e.add_term(((t, 0), (0, 0)), Scalar::one());
        }
        e
    });

    let fmt = Arc::new(move |i: &DoubleIdx| format!("{}><{}", fmt_dual(&i.0), fmt_ore(&i.1)));

    let d = Arc::new(MhaInstance {
        name: "ore-double".into(),
        one: None,
        local_unit: Some(local_unit),
        product,
        cov_right,
        cov_left,
        counit,
        antipode,
        antipode_inv,
        full_coproduct: None,
        window,
        fmt_basis: fmt,
        integrals: None,
    });

    let r = ore_double_r(&a, &twist, corrupt == Some(Corruption::DoubleRSign));
    OreDouble { qt: QtInstance { inst: d, r }, a, ahat, twist }
}

/// First-leg covers of R = sum w[p,k] >< 1 (x) 1 >< a^p b^k.  The
/// corrupted variant negates the odd half of the sum (every term whose
/// second factor carries b).
fn ore_double_r(
    a: &Arc<MhaInstance<OreIdx>>,
    twist: &Twist,
    corrupt: bool,
) -> TwoLegMultiplier<DoubleIdx> {
    let (a1, t1) = (a.clone(), twist.clone());
    let entry = move |k: i64, l: u8| -> MulEntry<DoubleIdx> {
        MulEntry::Op(one_box(&a1, &t1, Elem::basis((k, l))))
    };
    let sgn = move |l: u8| -> Scalar {
        if corrupt && l == 1 {
            -Scalar::one()
        } else {
            Scalar::one()
        }
    };

    let el = entry.clone();
    let sl = sgn;
    let cover_left = Arc::new(move |i: &DoubleIdx| -> Vec<(Elem<DoubleIdx>, MulEntry<DoubleIdx>)> {
        let ((q, m), x) = *i;
        match m {
            0 => vec![
                (Elem::basis(((q, 0), x)), el(q, 0)),
                (Elem::basis(((q, 1), x)).scale(&sl(1)), el(q, 1)),
            ],
            _ => vec![(Elem::basis(((q, 1), x)), el(q + 1, 0))],
        }
    });

    let er = entry;
    let sr = sgn;
    let cover_right = Arc::new(move |i: &DoubleIdx| -> Vec<(Elem<DoubleIdx>, MulEntry<DoubleIdx>)> {
        let ((q, m), (r, l)) = *i;
        match (m, l) {
            (0, 0) => vec![
                (Elem::basis(((q, 0), (r, 0))), er(q, 0)),
                (
                    Elem::basis(((q - 1, 1), (r, 0)))
                        .scale(&(Scalar::neg_one_pow(r) * sr(1))),
                    er(q - 1, 1),
                ),
            ],
            (0, _) => vec![
                (Elem::basis(((q, 0), (r, 1))), er(q + 1, 0)),
                (
                    Elem::basis(((q, 0), (r, 0)))
                        .add(&Elem::basis(((q, 0), (r + 1, 0))).scale(&Scalar::neg_one_pow(q + 1)))
                        .add(&Elem::basis(((q - 1, 1), (r, 1))).scale(&Scalar::neg_one_pow(r + 1)))
                        .scale(&sr(1)),
                    er(q, 1),
                ),
            ],
            (_, 0) => vec![(Elem::basis(((q, 1), (r, 0))), er(q, 0))],
            _ => vec![
                (Elem::basis(((q, 1), (r, 1))), er(q + 1, 0)),
                (
                    Elem::basis(((q, 1), (r, 0)))
                        .add(&Elem::basis(((q, 1), (r + 1, 0))).scale(&Scalar::neg_one_pow(q + 1)))
                        .scale(&sr(1)),
                    er(q, 1),
                ),
            ],
        }
    });

    TwoLegMultiplier {
        tag: "R".into(),
        cover_left,
        cover_right,
        snd_cover_left: None,
        snd_cover_right: None,
    }
}

/// The truncated normal forms of u, u^{-1} and S(u)^{-1}: every term
/// has the dual factor on the left.
pub fn series_u(k: i64) -> Elem<DoubleIdx> {
    let mut out = Elem::zero();
    for p in -k..=k {
        out.add_term(((p, 0), (-p - 1, 0)), Scalar::neg_one_pow(p));
        out.add_term(((p, 1), (-p - 2, 1)), Scalar::one());
    }
    out
}

pub fn series_u_inv(k: i64) -> Elem<DoubleIdx> {
    let mut out = Elem::zero();
    for p in -k..=k {
        out.add_term(((p, 0), (p + 1, 0)), Scalar::neg_one_pow(p));
        out.add_term(((p - 1, 1), (p, 1)), Scalar::neg_one_pow(p));
    }
    out
}

pub fn series_su_inv(k: i64) -> Elem<DoubleIdx> {
    let mut out = Elem::zero();
    for p in -k..=k {
        out.add_term(((p, 0), (p, 0)), Scalar::one());
        out.add_term(((p, 1), (p, 1)), -Scalar::one());
    }
    out
}

/// The three pre-normal-form expansions, as (second-factor, dual)
/// pairs whose twists sum to the normal forms above.
fn display1_u(k: i64) -> Vec<(Elem<OreIdx>, Elem<DualIdx>)> {
    let mut out = Vec::new();
    for p in -k..=k {
        out.push((Elem::basis((-p, 0)), Elem::basis((p, 0))));
        out.push((
            Elem::single((-1 - p, 1), Scalar::neg_one_pow(p)),
            Elem::basis((p, 1)),
        ));
    }
    out
}

fn display1_u_inv(k: i64) -> Vec<(Elem<OreIdx>, Elem<DualIdx>)> {
    let mut out = Vec::new();
    for p in -k..=k {
        out.push((Elem::basis((p, 0)), Elem::basis((p, 0))));
        out.push((Elem::single((p, 1), -Scalar::one()), Elem::basis((p, 1))));
    }
    out
}

fn display1_su_inv(k: i64) -> Vec<(Elem<OreIdx>, Elem<DualIdx>)> {
    let mut out = Vec::new();
    for p in -k..=k {
        out.push((Elem::single((-p - 1, 0), Scalar::neg_one_pow(p)), Elem::basis((-p, 0))));
        out.push((
            Elem::single((-1 - p, 1), Scalar::neg_one_pow(p + 1)),
            Elem::basis((-p, 1)),
        ));
    }
    out
}

fn restrict_dual(t: &Elem<DoubleIdx>, k: i64) -> Elem<DoubleIdx> {
    Elem::from_terms(
        t.terms()
            .filter(|(((p, _), _), _)| p.abs() <= k)
            .map(|(i, c)| (*i, c.clone())),
    )
}

/// The commutation rules, the normal forms of the inner multipliers,
/// and the grouplike they compose to.
pub fn check_double_relations(od: &OreDouble, radius: u32, run: &mut SuiteRun) {
    let d = &od.qt.inst;
    let rr = radius as i64;
    let am = |m: i64| -> Elem<OreIdx> { Elem::basis((m, 0)) };
    let b: Elem<OreIdx> = Elem::basis((0, 1));

    // Crossing rules, swept over the dual index.
    for p in -(rr + 2)..=(rr + 2) {
        let w0: Elem<DualIdx> = Elem::basis((p, 0));
        let w1: Elem<DualIdx> = Elem::basis((p, 1));
        let rt = |t: &Tensor2<DualIdx, OreIdx>| d.render(t);
        run.check(
            format!("a w[{p},0] = w[{p},0] a"),
            &(od.twist)(&am(1), &w0),
            &Elem::basis(((p, 0), (1, 0))),
            rt,
        );
        run.check(
            format!("b w[{p},0] = w[{},0] b", p - 1),
            &(od.twist)(&b, &w0),
            &Elem::basis(((p - 1, 0), (0, 1))),
            rt,
        );
        run.check(
            format!("a w[{p},1] = -w[{p},1] a"),
            &(od.twist)(&am(1), &w1),
            &Elem::basis(((p, 1), (1, 0))).neg(),
            rt,
        );
        let mut rule4: Elem<DoubleIdx> = Elem::basis(((p, 0), (0, 0)));
        rule4.add_term(((p, 0), (1, 0)), Scalar::neg_one_pow(p + 1));
        rule4.add_term(((p - 1, 1), (0, 1)), -Scalar::one());
        run.check(format!("b w[{p},1] crossing"), &(od.twist)(&b, &w1), &rule4, rt);
        run.check(
            format!("a^-1 w[{p},0] = w[{p},0] a^-1"),
            &(od.twist)(&am(-1), &w0),
            &Elem::basis(((p, 0), (-1, 0))),
            rt,
        );
        run.check(
            format!("a^-1 w[{p},1] = -w[{p},1] a^-1"),
            &(od.twist)(&am(-1), &w1),
            &Elem::basis(((p, 1), (-1, 0))).neg(),
            rt,
        );
    }

    // The inner multipliers against their frozen normal forms, on a
    // sampled set plus the stabilization margin.
    let u = od.qt.compute_u();
    let uinv = od.qt.compute_u_inv();
    let su_inv = crate::mha::extend_antipode(&od.qt.inst, &uinv);
    let k = rr + 3;
    let window = (d.window)(radius);
    let named: [(&str, &Multiplier<DoubleIdx>, fn(i64) -> Elem<DoubleIdx>); 3] = [
        ("u", &u, series_u),
        ("u^-1", &uinv, series_u_inv),
        ("S(u)^-1", &su_inv, series_su_inv),
    ];
    for (label, op, series) in named {
        let sk = series(k);
        let sk1 = series(k + 1);
        for i in &window {
            let x = Elem::basis(*i);
            let lhs = op.left_act(&x);
            let rhs = d.mul(&sk, &x);
            run.check(
                format!("{label} . {} vs normal form", (d.fmt_basis)(i)),
                &lhs,
                &rhs,
                |e| d.render(e),
            );
            let rhs_r = d.mul(&x, &sk);
            run.check(
                format!("{} . {label} vs normal form", (d.fmt_basis)(i)),
                &op.right_act(&x),
                &rhs_r,
                |e| d.render(e),
            );
            run.check(
                format!("{label} truncation stable at {}", (d.fmt_basis)(i)),
                &d.mul(&sk1, &x),
                &rhs,
                |e| d.render(e),
            );
            run.check(
                format!("{label} truncation stable at {} from the right", (d.fmt_basis)(i)),
                &d.mul(&x, &sk1),
                &rhs_r,
                |e| d.render(e),
            );
        }
    }

    // Normalizing the raw expansions through the twist reproduces the
    // normal forms away from the truncation edge.
    let displays: [(&str, fn(i64) -> Vec<(Elem<OreIdx>, Elem<DualIdx>)>, fn(i64) -> Elem<DoubleIdx>);
        3] = [
        ("u", display1_u, series_u),
        ("u^-1", display1_u_inv, series_u_inv),
        ("S(u)^-1", display1_su_inv, series_su_inv),
    ];
    for (label, display, series) in displays {
        let mut normalized = Elem::zero();
        for (z, f) in display(rr + 2) {
            normalized.add_assign(&(od.twist)(&z, &f));
        }
        run.check(
            format!("{label} expansion normalizes to its normal form (|p| <= {rr})"),
            &restrict_dual(&normalized, rr),
            &restrict_dual(&series(rr + 2), rr),
            |e| d.render(e),
        );
    }

    // u S(u)^{-1} is the grouplike pair of modular elements.
    let g = Multiplier::compose(&u, &su_inv);
    for i in &window {
        let ((q, m), (r, l)) = *i;
        let expect = Elem::single(((q, m), (r - 1, l)), Scalar::neg_one_pow(q));
        let x = Elem::basis(*i);
        run.check(
            format!("u S(u)^-1 from the left at {}", (d.fmt_basis)(i)),
            &g.left_act(&x),
            &expect,
            |e| d.render(e),
        );
        run.check(
            format!("u S(u)^-1 from the right at {}", (d.fmt_basis)(i)),
            &g.right_act(&x),
            &expect,
            |e| d.render(e),
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::check_mha_axioms;
    use crate::quasitri::{check_inner_s2, check_inner_s4, check_qt_axioms, check_yang_baxter};
    use crate::report::{Status, SuiteReport, SuiteRun};

    fn expect(rep: &SuiteReport, want: Status) {
        if rep.status != want {
            let bad = rep.samples.iter().find(|s| s.status != Status::Pass);
            panic!(
                "suite {} on {}: status {:?}, first non-pass sample {:?}",
                rep.name, rep.instance, rep.status, bad
            );
        }
    }

    #[test]
    fn relations_and_normal_forms_hold() {
        let od = ore_double(None);
        let mut run = SuiteRun::new("double-relations", "ore-double");
        check_double_relations(&od, 2, &mut run);
        expect(&run.finish(), Status::Pass);
    }

    #[test]
    fn double_satisfies_the_axioms() {
        let od = ore_double(None);
        let mut run = SuiteRun::new("mha-axioms", "ore-double");
        check_mha_axioms(&od.qt.inst, 2, 7, &mut run);
        expect(&run.finish(), Status::Pass);
    }

    #[test]
    fn double_satisfies_the_qt_axioms() {
        let od = ore_double(None);
        let mut run = SuiteRun::new("qt-axioms", "ore-double");
        check_qt_axioms(&od.qt, 1, 13, &mut run);
        expect(&run.finish(), Status::Pass);
    }

    #[test]
    fn yang_baxter_holds_on_the_double() {
        let od = ore_double(None);
        let mut run = SuiteRun::new("yang-baxter", "ore-double");
        check_yang_baxter(&od.qt, 1, 17, &mut run);
        expect(&run.finish(), Status::Pass);
    }

    #[test]
    fn inner_forms_hold_on_the_double() {
        let od = ore_double(None);
        let mut run = SuiteRun::new("inner-s2", "ore-double");
        check_inner_s2(&od.qt, 1, 19, &mut run);
        expect(&run.finish(), Status::Pass);
        let mut run = SuiteRun::new("inner-s4", "ore-double");
        check_inner_s4(&od.qt, 1, 23, &mut run);
        expect(&run.finish(), Status::Pass);
    }

    #[test]
    fn twist_sign_corruption_is_caught() {
        let od = ore_double(Some(Corruption::OreCommutationSign));
        let mut run = SuiteRun::new("double-relations", "ore-double");
        check_double_relations(&od, 1, &mut run);
        expect(&run.finish(), Status::Fail);
    }

    #[test]
    fn r_sign_corruption_is_caught() {
        let od = ore_double(Some(Corruption::DoubleRSign));
        let mut run = SuiteRun::new("inner-s4", "ore-double");
        check_inner_s4(&od.qt, 1, 29, &mut run);
        expect(&run.finish(), Status::Fail);
    }
}

