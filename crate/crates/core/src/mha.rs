//! The regular multiplier Hopf algebra abstraction.
//!
//! An instance bundles its structure maps as closures over a basis index
//! type: product, the two covered coproducts, counit, antipode and its
//! inverse.  Coproducts are stored only in covered form.  For a basis
//! element x the full coproduct may be an infinite sum, but the products
//!
//! ```text
//!   Delta(x)(1 (x) y)      "cov_right"
//!   (x (x) 1) Delta(y)     "cov_left"
//! ```
//!
//! are finite elements of the tensor square, and every identity this
//! crate checks can be phrased through them.  Instances that happen to
//! be honest Hopf algebras (the Ore extension itself, the finite group
//! instances) additionally expose the full coproduct, which the double
//! construction needs for Sweedler legs of its second factor.
//!
//! Elements of the multiplier algebra M(A) are represented as pairs of
//! compatible left/right multiplication operators, never as formal
//! infinite sums.  Equality of multipliers is decided on a window of
//! basis elements; the window radius travels with every report so a
//! pass is never read as stronger than it is.

use crate::linalg::{lin2, Elem, Idx, Tensor2};
use crate::scalar::Scalar;
use std::sync::Arc;

/// Integral and modular data, present on instances that carry it.
///
/// `dual_modular_pairing(k, x)` evaluates the k-th power of the modular
/// multiplier of the dual algebra against x, through the duality
/// pairing.  It exists only where that pairing has a closed form.
pub struct IntegralData<I: Idx> {
    /// Left invariant functional phi.
    pub left_integral: Arc<dyn Fn(&Elem<I>) -> Scalar + Send + Sync>,
    /// Right invariant functional psi.
    pub right_integral: Arc<dyn Fn(&Elem<I>) -> Scalar + Send + Sync>,
    /// Cointegral h (discrete instances only): x.h = counit(x) h.
    pub cointegral: Option<Elem<I>>,
    /// Modular multiplier delta, with closed-form power actions.
    pub modular: Option<GrouplikeMul<I>>,
    /// (k, x) |-> <delta_dual^k, x>.
    pub dual_modular_pairing: Option<Arc<dyn Fn(i64, &Elem<I>) -> Scalar + Send + Sync>>,
}

/// A regular multiplier Hopf algebra, given by structure closures on
/// basis indices.  All maps extend linearly.
pub struct MhaInstance<I: Idx> {
    pub name: String,
    /// The unit element for unital instances.
    pub one: Option<Elem<I>>,
    /// For non-unital instances with local units: an element acting as
    /// identity on the span of the given indices.
    pub local_unit: Option<Arc<dyn Fn(&[I]) -> Elem<I> + Send + Sync>>,
    pub product: Arc<dyn Fn(&I, &I) -> Elem<I> + Send + Sync>,
    /// Delta(x)(1 (x) y) on basis pairs.
    pub cov_right: Arc<dyn Fn(&I, &I) -> Tensor2<I, I> + Send + Sync>,
    /// (x (x) 1) Delta(y) on basis pairs.
    pub cov_left: Arc<dyn Fn(&I, &I) -> Tensor2<I, I> + Send + Sync>,
    pub counit: Arc<dyn Fn(&I) -> Scalar + Send + Sync>,
    pub antipode: Arc<dyn Fn(&I) -> Elem<I> + Send + Sync>,
    pub antipode_inv: Arc<dyn Fn(&I) -> Elem<I> + Send + Sync>,
    /// Full coproduct when it is a finite sum for every basis element.
    pub full_coproduct: Option<Arc<dyn Fn(&I) -> Tensor2<I, I> + Send + Sync>>,
    /// Basis window of the given radius, in canonical order.
    pub window: Arc<dyn Fn(u32) -> Vec<I> + Send + Sync>,
    /// Canonical rendering of a basis index.
    pub fmt_basis: Arc<dyn Fn(&I) -> String + Send + Sync>,
    /// Integral and modular data, when the instance carries it.
    pub integrals: Option<IntegralData<I>>,
}

impl<I: Idx> MhaInstance<I> {
    pub fn mul(&self, x: &Elem<I>, y: &Elem<I>) -> Elem<I> {
        lin2(|i, j| (self.product)(i, j), x, y)
    }

    pub fn mul3(&self, x: &Elem<I>, y: &Elem<I>, z: &Elem<I>) -> Elem<I> {
        self.mul(&self.mul(x, y), z)
    }

    /// Delta(x)(1 (x) y), extended bilinearly.
    pub fn cov_right_e(&self, x: &Elem<I>, y: &Elem<I>) -> Tensor2<I, I> {
        lin2(|i, j| (self.cov_right)(i, j), x, y)
    }

    /// (x (x) 1) Delta(y), extended bilinearly.
    pub fn cov_left_e(&self, x: &Elem<I>, y: &Elem<I>) -> Tensor2<I, I> {
        lin2(|i, j| (self.cov_left)(i, j), x, y)
    }

    pub fn counit_e(&self, x: &Elem<I>) -> Scalar {
        x.eval(|i| (self.counit)(i))
    }

    pub fn antipode_e(&self, x: &Elem<I>) -> Elem<I> {
        x.map(|i| (self.antipode)(i))
    }

    pub fn antipode_inv_e(&self, x: &Elem<I>) -> Elem<I> {
        x.map(|i| (self.antipode_inv)(i))
    }

    /// S^k for any integer k (k may be negative).
    pub fn s_pow(&self, k: i32, x: &Elem<I>) -> Elem<I> {
        let mut out = x.clone();
        if k >= 0 {
            for _ in 0..k {
                out = self.antipode_e(&out);
            }
        } else {
            for _ in 0..(-k) {
                out = self.antipode_inv_e(&out);
            }
        }
        out
    }

    pub fn full_coproduct_e(&self, x: &Elem<I>) -> Option<Tensor2<I, I>> {
        let f = self.full_coproduct.as_ref()?;
        Some(x.map(|i| f(i)))
    }

    /// Delta(x)(y (x) z) = [Delta(x)(1 (x) z)] (y (x) 1), finite.
    pub fn coprod_act(&self, x: &Elem<I>, y: &Elem<I>, z: &Elem<I>) -> Tensor2<I, I> {
        let t = self.cov_right_e(x, z);
        crate::linalg::leg1(&t, |i| self.mul(&Elem::basis(i.clone()), y))
    }

    /// (y (x) z) Delta(x) = (1 (x) z) [(y (x) 1) Delta(x)], finite.
    pub fn coprod_act_from_right(&self, y: &Elem<I>, z: &Elem<I>, x: &Elem<I>) -> Tensor2<I, I> {
        let t = self.cov_left_e(y, x);
        crate::linalg::leg2(&t, |j| self.mul(z, &Elem::basis(j.clone())))
    }

    /// Render an element in canonical text form.
    pub fn render(&self, x: &Elem<I>) -> String {
        x.render(|i| (self.fmt_basis)(i))
    }

    pub fn render_tensor(&self, t: &Tensor2<I, I>) -> String {
        t.render(|(i, j)| format!("{}(x){}", (self.fmt_basis)(i), (self.fmt_basis)(j)))
    }
}

/// A two-sided multiplier of an instance, as a compatible operator pair.
#[derive(Clone)]
pub struct Multiplier<I: Idx> {
    /// Closed-form tag for reporting, e.g. `d^` powers.
    pub tag: String,
    /// x |-> m.x
    pub left: Arc<dyn Fn(&Elem<I>) -> Elem<I> + Send + Sync>,
    /// x |-> x.m
    pub right: Arc<dyn Fn(&Elem<I>) -> Elem<I> + Send + Sync>,
}

impl<I: Idx> Multiplier<I> {
    /// Canonical embedding of an element into M(A).
    pub fn from_elem(inst: &Arc<MhaInstance<I>>, g: Elem<I>, tag: impl Into<String>) -> Self {
        let il = inst.clone();
        let ir = inst.clone();
        let gl = g.clone();
        Multiplier {
            tag: tag.into(),
            left: Arc::new(move |x| il.mul(&gl, x)),
            right: Arc::new(move |x| ir.mul(x, &g)),
        }
    }

    /// The identity multiplier.
    pub fn identity() -> Self {
        Multiplier {
            tag: "1".into(),
            left: Arc::new(|x: &Elem<I>| x.clone()),
            right: Arc::new(|x: &Elem<I>| x.clone()),
        }
    }

    /// Product of multipliers: (mn).x = m.(n.x), x.(mn) = (x.m).n.
    pub fn compose(m: &Multiplier<I>, n: &Multiplier<I>) -> Multiplier<I> {
        let (ml, nl) = (m.left.clone(), n.left.clone());
        let (mr, nr) = (m.right.clone(), n.right.clone());
        Multiplier {
            tag: format!("{}*{}", m.tag, n.tag),
            left: Arc::new(move |x| ml(&nl(x))),
            right: Arc::new(move |x| nr(&mr(x))),
        }
    }

    pub fn left_act(&self, x: &Elem<I>) -> Elem<I> {
        (self.left)(x)
    }

    pub fn right_act(&self, x: &Elem<I>) -> Elem<I> {
        (self.right)(x)
    }
}

/// Extension of the antipode to M(A): S(m).x = S(x S^{-1}(x'))-style,
/// concretely S(m).x = S(m.right(S^{-1}(x))) and symmetrically.
pub fn extend_antipode<I: Idx>(inst: &Arc<MhaInstance<I>>, m: &Multiplier<I>) -> Multiplier<I> {
    let (il, ir) = (inst.clone(), inst.clone());
    let (mr, ml) = (m.right.clone(), m.left.clone());
    Multiplier {
        tag: format!("S({})", m.tag),
        left: Arc::new(move |x| il.antipode_e(&mr(&il.antipode_inv_e(x)))),
        right: Arc::new(move |x| ir.antipode_e(&ml(&ir.antipode_inv_e(x)))),
    }
}

/// Extension of the inverse antipode to M(A).
pub fn extend_antipode_inv<I: Idx>(inst: &Arc<MhaInstance<I>>, m: &Multiplier<I>) -> Multiplier<I> {
    let (il, ir) = (inst.clone(), inst.clone());
    let (mr, ml) = (m.right.clone(), m.left.clone());
    Multiplier {
        tag: format!("Sinv({})", m.tag),
        left: Arc::new(move |x| il.antipode_inv_e(&mr(&il.antipode_e(x)))),
        right: Arc::new(move |x| ir.antipode_inv_e(&ml(&ir.antipode_e(x)))),
    }
}

/// A second-leg entry of a half-covered expansion: an honest element
/// of A, a grouplike multiplier given as a power of a fixed base with
/// closed-form actions, or a general operator pair with its structure
/// maps supplied as closures.
#[derive(Clone)]
pub enum MulEntry<I: Idx> {
    Elem(Elem<I>),
    Grouplike(GrouplikeMul<I>),
    Op(OpMul<I>),
}

/// An operator-backed multiplier entry for second legs that are
/// neither elements nor grouplike powers, such as the one-sided
/// factors of a double.  Antipode images are built lazily, so a family
/// that is closed under S never materializes more than one member at a
/// time.
#[derive(Clone)]
pub struct OpMul<I: Idx> {
    pub tag: String,
    pub left: Arc<dyn Fn(&Elem<I>) -> Elem<I> + Send + Sync>,
    pub right: Arc<dyn Fn(&Elem<I>) -> Elem<I> + Send + Sync>,
    pub counit: Scalar,
    /// Delta(m)(y (x) z), resolved against both legs.
    pub coprod: Arc<dyn Fn(&Elem<I>, &Elem<I>) -> Tensor2<I, I> + Send + Sync>,
    pub antipode: Arc<dyn Fn() -> OpMul<I> + Send + Sync>,
    pub antipode_inv: Arc<dyn Fn() -> OpMul<I> + Send + Sync>,
}

/// A grouplike multiplier family base^k.  The base is grouplike, so its
/// counit is 1, its coproduct acts diagonally, and the antipode sends
/// base^k to base^{-k}.
#[derive(Clone)]
pub struct GrouplikeMul<I: Idx> {
    /// Tag of the base (power is tracked separately).
    pub base_tag: String,
    pub power: i64,
    /// (k, x) |-> base^k . x
    pub base_left: Arc<dyn Fn(i64, &Elem<I>) -> Elem<I> + Send + Sync>,
    /// (k, x) |-> x . base^k
    pub base_right: Arc<dyn Fn(i64, &Elem<I>) -> Elem<I> + Send + Sync>,
}

impl<I: Idx> GrouplikeMul<I> {
    /// The unit as a grouplike: both power actions are the identity.
    pub fn trivial() -> GrouplikeMul<I> {
        GrouplikeMul {
            base_tag: "1".into(),
            power: 0,
            base_left: Arc::new(|_, x| x.clone()),
            base_right: Arc::new(|_, x| x.clone()),
        }
    }

    pub fn tag(&self) -> String {
        match self.power {
            1 => self.base_tag.clone(),
            p => format!("{}^{}", self.base_tag, p),
        }
    }

    pub fn pow(&self, extra: i64) -> GrouplikeMul<I> {
        let mut g = self.clone();
        g.power += extra;
        g
    }

    pub fn with_power(&self, power: i64) -> GrouplikeMul<I> {
        let mut g = self.clone();
        g.power = power;
        g
    }

    pub fn as_multiplier(&self) -> Multiplier<I> {
        let (bl, br) = (self.base_left.clone(), self.base_right.clone());
        let k = self.power;
        Multiplier {
            tag: self.tag(),
            left: Arc::new(move |x| bl(k, x)),
            right: Arc::new(move |x| br(k, x)),
        }
    }
}

impl<I: Idx> MulEntry<I> {
    pub fn tag(&self, inst: &MhaInstance<I>) -> String {
        match self {
            MulEntry::Elem(e) => inst.render(e),
            MulEntry::Grouplike(g) => g.tag(),
            MulEntry::Op(o) => o.tag.clone(),
        }
    }

    /// M . y
    pub fn act_left(&self, inst: &MhaInstance<I>, y: &Elem<I>) -> Elem<I> {
        match self {
            MulEntry::Elem(e) => inst.mul(e, y),
            MulEntry::Grouplike(g) => (g.base_left)(g.power, y),
            MulEntry::Op(o) => (o.left)(y),
        }
    }

    /// y . M
    pub fn act_right(&self, inst: &MhaInstance<I>, y: &Elem<I>) -> Elem<I> {
        match self {
            MulEntry::Elem(e) => inst.mul(y, e),
            MulEntry::Grouplike(g) => (g.base_right)(g.power, y),
            MulEntry::Op(o) => (o.right)(y),
        }
    }

    /// S(M), using that S inverts grouplikes.
    pub fn antipode(&self, inst: &MhaInstance<I>) -> MulEntry<I> {
        match self {
            MulEntry::Elem(e) => MulEntry::Elem(inst.antipode_e(e)),
            MulEntry::Grouplike(g) => MulEntry::Grouplike(g.with_power(-g.power)),
            MulEntry::Op(o) => MulEntry::Op((o.antipode)()),
        }
    }

    /// S^{-1}(M); on grouplike powers this coincides with S.
    pub fn antipode_inv(&self, inst: &MhaInstance<I>) -> MulEntry<I> {
        match self {
            MulEntry::Elem(e) => MulEntry::Elem(inst.antipode_inv_e(e)),
            MulEntry::Grouplike(g) => MulEntry::Grouplike(g.with_power(-g.power)),
            MulEntry::Op(o) => MulEntry::Op((o.antipode_inv)()),
        }
    }

    /// S^2(M).
    pub fn antipode_sq(&self, inst: &MhaInstance<I>) -> MulEntry<I> {
        self.antipode(inst).antipode(inst)
    }

    pub fn counit(&self, inst: &MhaInstance<I>) -> Scalar {
        match self {
            MulEntry::Elem(e) => inst.counit_e(e),
            MulEntry::Grouplike(_) => Scalar::one(),
            MulEntry::Op(o) => o.counit.clone(),
        }
    }

    /// Delta(M)(y (x) z), finite: sandwich for elements, diagonal for
    /// grouplikes, supplied directly for operator entries.
    pub fn coprod_act(&self, inst: &MhaInstance<I>, y: &Elem<I>, z: &Elem<I>) -> Tensor2<I, I> {
        match self {
            MulEntry::Elem(e) => inst.coprod_act(e, y, z),
            MulEntry::Grouplike(g) => {
                let a = (g.base_left)(g.power, y);
                let b = (g.base_left)(g.power, z);
                a.tensor(&b)
            }
            MulEntry::Op(o) => (o.coprod)(y, z),
        }
    }
}

/// A half-covered element of M(A (x) A) such as an R-matrix: for every
/// basis element x the products R(x (x) 1) and (x (x) 1)R are finite
/// sums sum_r e_r (x) M_r with e_r in A and M_r a second-leg entry.
/// Second-leg covers (against 1 (x) y) exist for some instances and are
/// optional.
#[derive(Clone)]
pub struct TwoLegMultiplier<I: Idx> {
    pub tag: String,
    /// R(x (x) 1) = sum e (x) M.
    pub cover_left: Arc<dyn Fn(&I) -> Vec<(Elem<I>, MulEntry<I>)> + Send + Sync>,
    /// (x (x) 1) R = sum e (x) M.
    pub cover_right: Arc<dyn Fn(&I) -> Vec<(Elem<I>, MulEntry<I>)> + Send + Sync>,
    /// R(1 (x) y) = sum M (x) e, when available.
    pub snd_cover_left: Option<Arc<dyn Fn(&I) -> Vec<(MulEntry<I>, Elem<I>)> + Send + Sync>>,
    /// (1 (x) y) R = sum M (x) e, when available.
    pub snd_cover_right: Option<Arc<dyn Fn(&I) -> Vec<(MulEntry<I>, Elem<I>)> + Send + Sync>>,
}

/// Scales a half-cover list by a coefficient (on the element leg).
fn scale_cover<I: Idx>(list: &[(Elem<I>, MulEntry<I>)], c: &Scalar) -> Vec<(Elem<I>, MulEntry<I>)> {
    list.iter()
        .map(|(e, m)| (e.scale(c), m.clone()))
        .collect()
}

impl<I: Idx> TwoLegMultiplier<I> {
    /// Linear extension of `cover_left` to elements.
    pub fn cover_left_e(&self, x: &Elem<I>) -> Vec<(Elem<I>, MulEntry<I>)> {
        let mut out = Vec::new();
        for (i, c) in x.terms() {
            out.extend(scale_cover(&(self.cover_left)(i), c));
        }
        out
    }

    pub fn cover_right_e(&self, x: &Elem<I>) -> Vec<(Elem<I>, MulEntry<I>)> {
        let mut out = Vec::new();
        for (i, c) in x.terms() {
            out.extend(scale_cover(&(self.cover_right)(i), c));
        }
        out
    }

    /// R . t for a finite tensor t: resolve cover_left on the first leg
    /// of every term and let the second-leg entries act on the second.
    pub fn act_left(&self, inst: &MhaInstance<I>, t: &Tensor2<I, I>) -> Tensor2<I, I> {
        let mut out = Elem::zero();
        for ((x, y), c) in t.terms() {
            for (e, m) in (self.cover_left)(x) {
                let my = m.act_left(inst, &Elem::basis(y.clone()));
                out.add_assign(&e.tensor(&my).scale(c));
            }
        }
        out
    }

    /// t . R.
    pub fn act_right(&self, inst: &MhaInstance<I>, t: &Tensor2<I, I>) -> Tensor2<I, I> {
        let mut out = Elem::zero();
        for ((x, y), c) in t.terms() {
            for (e, m) in (self.cover_right)(x) {
                let ym = m.act_right(inst, &Elem::basis(y.clone()));
                out.add_assign(&e.tensor(&ym).scale(c));
            }
        }
        out
    }

    /// sigma(R) . t, via cover_left on the second leg:
    /// sigma(R)(x (x) y) = sum M_r x (x) e_r where R(y (x) 1) = sum e_r (x) M_r.
    pub fn sigma_act_left(&self, inst: &MhaInstance<I>, t: &Tensor2<I, I>) -> Tensor2<I, I> {
        let mut out = Elem::zero();
        for ((x, y), c) in t.terms() {
            for (e, m) in (self.cover_left)(y) {
                let mx = m.act_left(inst, &Elem::basis(x.clone()));
                out.add_assign(&mx.tensor(&e).scale(c));
            }
        }
        out
    }

    /// t . sigma(R), via cover_right on the second leg.
    pub fn sigma_act_right(&self, inst: &MhaInstance<I>, t: &Tensor2<I, I>) -> Tensor2<I, I> {
        let mut out = Elem::zero();
        for ((x, y), c) in t.terms() {
            for (e, m) in (self.cover_right)(y) {
                let xm = m.act_right(inst, &Elem::basis(x.clone()));
                out.add_assign(&xm.tensor(&e).scale(c));
            }
        }
        out
    }

    /// The two-leg multiplier (iota (x) S^{+/-1})(R), which represents
    /// R^{-1} when R satisfies the inverse formulas.  `inv_of_s = false`
    /// applies S^{-1} to second legs (the usual direction).
    pub fn leg2_antipode(&self, inst: &Arc<MhaInstance<I>>, use_s: bool) -> TwoLegMultiplier<I> {
        let (il, ir) = (inst.clone(), inst.clone());
        let (cl, cr) = (self.cover_left.clone(), self.cover_right.clone());
        let map = move |inst: &MhaInstance<I>, list: Vec<(Elem<I>, MulEntry<I>)>| {
            list.into_iter()
                .map(|(e, m)| {
                    let m2 = if use_s { m.antipode(inst) } else { m.antipode_inv(inst) };
                    (e, m2)
                })
                .collect::<Vec<_>>()
        };
        let map_l = map.clone();
        TwoLegMultiplier {
            tag: format!("(i(x)S{})({})", if use_s { "" } else { "inv" }, self.tag),
            cover_left: Arc::new(move |i| map_l(&il, cl(i))),
            cover_right: Arc::new(move |i| map(&ir, cr(i))),
            snd_cover_left: None,
            snd_cover_right: None,
        }
    }
}

/// Outcome of a window comparison of two multipliers.
pub struct WindowEq {
    pub equal: bool,
    /// First disagreeing sample, rendered, if any: (basis, side, lhs, rhs).
    pub counterexample: Option<(String, &'static str, String, String)>,
}

/// Compares two multipliers by both actions on every basis element of
/// the window.  The caller is responsible for the stabilization pass
/// (re-running at radius+1).
pub fn multiplier_eq_window<I: Idx>(
    inst: &MhaInstance<I>,
    m1: &Multiplier<I>,
    m2: &Multiplier<I>,
    radius: u32,
) -> WindowEq {
    for i in (inst.window)(radius) {
        let x = Elem::basis(i.clone());
        let (l1, l2) = (m1.left_act(&x), m2.left_act(&x));
        if l1 != l2 {
            return WindowEq {
                equal: false,
                counterexample: Some((
                    (inst.fmt_basis)(&i),
                    "left",
                    inst.render(&l1),
                    inst.render(&l2),
                )),
            };
        }
        let (r1, r2) = (m1.right_act(&x), m2.right_act(&x));
        if r1 != r2 {
            return WindowEq {
                equal: false,
                counterexample: Some((
                    (inst.fmt_basis)(&i),
                    "right",
                    inst.render(&r1),
                    inst.render(&r2),
                )),
            };
        }
    }
    WindowEq { equal: true, counterexample: None }
}

/// Window equality with the stabilization check at radius and radius+1.
pub fn multiplier_eq_stable<I: Idx>(
    inst: &MhaInstance<I>,
    m1: &Multiplier<I>,
    m2: &Multiplier<I>,
    radius: u32,
) -> WindowEq {
    let first = multiplier_eq_window(inst, m1, m2, radius);
    if !first.equal {
        return first;
    }
    multiplier_eq_window(inst, m1, m2, radius + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A toy instance: the group algebra of (Z, +) with basis n |-> x^n.
    /// Grouplike basis, so all structure maps are simple shifts.
    fn laurent() -> Arc<MhaInstance<i64>> {
        Arc::new(MhaInstance {
            name: "laurent".into(),
            one: Some(Elem::basis(0)),
            local_unit: None,
            product: Arc::new(|m, n| Elem::basis(m + n)),
            cov_right: Arc::new(|m, n| Elem::basis((*m, *m + *n))),
            cov_left: Arc::new(|m, n| Elem::basis((*m + *n, *n))),
            counit: Arc::new(|_| Scalar::one()),
            antipode: Arc::new(|m| Elem::basis(-m)),
            antipode_inv: Arc::new(|m| Elem::basis(-m)),
            full_coproduct: Some(Arc::new(|m| Elem::basis((*m, *m)))),
            window: Arc::new(|r| {
                let r = r as i64;
                (-r..=r).collect()
            }),
            fmt_basis: Arc::new(|m| format!("x^{m}")),
            integrals: None,
        })
    }

    #[test]
    fn embedding_multiplies() {
        let inst = laurent();
        let m = Multiplier::from_elem(&inst, Elem::basis(3), "x^3");
        assert_eq!(m.left_act(&Elem::basis(1)), Elem::basis(4));
        assert_eq!(m.right_act(&Elem::basis(1)), Elem::basis(4));
    }

    #[test]
    fn compose_orders_actions() {
        let inst = laurent();
        let m = Multiplier::from_elem(&inst, Elem::basis(1), "x");
        let n = Multiplier::from_elem(&inst, Elem::basis(10), "x^10");
        let mn = Multiplier::compose(&m, &n);
        assert_eq!(mn.left_act(&Elem::basis(0)), Elem::basis(11));
        assert_eq!(mn.right_act(&Elem::basis(0)), Elem::basis(11));
    }

    #[test]
    fn extended_antipode_matches_embedding() {
        // S(m_g) = m_{S(g)} for the embedding of a grouplike.
        let inst = laurent();
        let m = Multiplier::from_elem(&inst, Elem::basis(5), "x^5");
        let sm = extend_antipode(&inst, &m);
        let expect = Multiplier::from_elem(&inst, Elem::basis(-5), "x^-5");
        let eq = multiplier_eq_stable(&inst, &sm, &expect, 4);
        assert!(eq.equal, "{:?}", eq.counterexample);
    }

    #[test]
    fn window_equality_detects_mismatch() {
        let inst = laurent();
        let m = Multiplier::from_elem(&inst, Elem::basis(1), "x");
        let n = Multiplier::from_elem(&inst, Elem::basis(2), "x^2");
        assert!(!multiplier_eq_window(&inst, &m, &n, 3).equal);
    }

    #[test]
    fn s_pow_signs() {
        let inst = laurent();
        assert_eq!(inst.s_pow(2, &Elem::basis(7)), Elem::basis(7));
        assert_eq!(inst.s_pow(-1, &Elem::basis(7)), Elem::basis(-7));
        assert_eq!(inst.s_pow(0, &Elem::basis(7)), Elem::basis(7));
    }
}
