//! Relations imposed on the weight-graded curve classes by a degree-`d`
//! pencil on the curve: the pencil-difference relations `P_n`, the ideal
//! rewriting that kills the weights above the gonality, the pushforward
//! formulas for the pencil curves `G_n`, closed forms for trigonal and
//! tetragonal curves, and the projector combination that forces the
//! weight-1 component to vanish.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use crate::binom::binom;
use crate::cycles::{apply_operator, unit_curve, CurveClass, EquivalenceLevel};
use crate::linalg;
use crate::rational::{frac, int_pow, rat, Rational};
use crate::ring::{gamma, log_gamma1, pi, IdealMask, RingElement};

/// A curve of genus `g` carrying a pencil of degree `d` (a `d:1` cover of
/// the line).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GonalContext {
    genus: u32,
    gonality: u32,
}

impl GonalContext {
    pub fn new(genus: u32, gonality: u32) -> Self {
        assert!(genus >= 1, "genus must be positive");
        assert!(gonality >= 2, "gonality must be at least 2");
        GonalContext { genus, gonality }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn gonality(&self) -> u32 {
        self.gonality
    }

    /// Every curve of genus `g` carries a pencil of degree at most
    /// `(g+3)/2`; beyond that the relations stay formally consistent but the
    /// geometric existence claim lapses. Callers should warn, not fail.
    pub fn exceeds_existence_bound(&self) -> bool {
        2 * self.gonality > self.genus + 3
    }

    pub fn level(&self) -> EquivalenceLevel {
        EquivalenceLevel::Algebraic(self.gonality)
    }
}

/// A curve class asserted to vanish in the algebraic quotient, together
/// with a tag naming the relation that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    cycle: CurveClass,
    tag: String,
}

impl Relation {
    pub fn cycle(&self) -> &CurveClass {
        &self.cycle
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn holds(&self, ctx: &GonalContext) -> bool {
        self.cycle.quotient(ctx.level()).is_zero()
    }
}

/// The operator `P_n = sum_{k=0}^{d} (-1)^k binom(d,k) gamma(n+1-k)`.
pub fn p_n_operator(ctx: &GonalContext, n: i64) -> RingElement {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let mut acc = RingElement::zero(g);
    for k in 0..=d {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = Rational::from_integer(sign * binom(d, k));
        acc = acc + gamma(g, n + 1 - k).scale(&coeff);
    }
    acc
}

/// The fixed correction cycle
/// `F_d = d[-C + sum_{j=1}^{d-2} (-1)^(j-1) (1/j) binom(d-1, d-2-j) j_* C^-]`,
/// independent of `n`.
pub fn f_d_cycle(ctx: &GonalContext) -> CurveClass {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let c = unit_curve(g);
    let mut acc = -&c;
    for j in 1..=d - 2 {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = frac(sign, j) * Rational::from_integer(binom(d - 1, d - 2 - j));
        acc = acc + c.push_forward(-j).scale(&coeff);
    }
    acc.scale(&rat(d))
}

/// The `gamma`-combination acting on the curve as `F_d` does: every
/// pushforward `j_* C^-` becomes `gamma(-j)`.
pub fn f_d_operator(ctx: &GonalContext) -> RingElement {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let mut acc = -gamma(g, 1);
    for j in 1..=d - 2 {
        let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = frac(sign, j) * Rational::from_integer(binom(d - 1, d - 2 - j));
        acc = acc + gamma(g, -j).scale(&coeff);
    }
    acc.scale(&rat(d))
}

/// The relation `P_n C + F_d ~ 0` in the algebraic quotient, built from the
/// displayed formulas and checked. Panics if the identity fails, which
/// would mean the binomial arithmetic is broken.
pub fn p_n_relation(ctx: &GonalContext, n: i64) -> Relation {
    let cycle = apply_operator(&p_n_operator(ctx, n), &unit_curve(ctx.genus)) + f_d_cycle(ctx);
    let relation = Relation {
        cycle,
        tag: format!("P_{} pencil relation (d={})", n, ctx.gonality),
    };
    assert!(
        relation.holds(ctx),
        "pencil relation failed for g={} d={} n={}: {}",
        ctx.genus,
        ctx.gonality,
        n,
        relation.cycle
    );
    relation
}

/// The set of weights the pencil relations force to vanish in the algebraic
/// quotient: `{1}` together with every weight whose `(d+1)`-th forward
/// difference survives.
///
/// Computed, not hard-coded: weight `i` is constrained exactly when the
/// `(d+1)`-th forward difference of `n -> n^i` is not identically zero
/// (polynomials of degree `<= d` are annihilated); weight 1 is killed by the
/// separate projector argument (`pi(2g-1)` annihilates curve classes).
pub fn derive_vanishing(ctx: &GonalContext) -> BTreeSet<u32> {
    let d = ctx.gonality as i64;
    let mut out = BTreeSet::new();
    out.insert(1);
    for i in 2..=ctx.genus + 1 {
        let constrained = (-3..=3i64).any(|m| {
            let mut diff = Rational::zero();
            for k in 0..=d + 1 {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                diff = diff
                    + Rational::from_integer(sign * binom(d + 1, k)) * int_pow(m + d + 1 - k, i);
            }
            !diff.is_zero()
        });
        if constrained {
            out.insert(i);
        }
    }
    out
}

fn check_gn_index(ctx: &GonalContext, n: u32) {
    // n = d is the formal extension: the pencil itself, which maps to a
    // point and vanishes in the quotient
    assert!(
        (1..=ctx.gonality).contains(&n),
        "pencil curve index out of range: n={n}, d={}",
        ctx.gonality
    );
}

fn g_n_combination(ctx: &GonalContext, n: u32) -> CurveClass {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let c = unit_curve(g);
    let mut acc = CurveClass::zero(g);
    for k in 1..=n as i64 {
        let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = frac(sign, k) * Rational::from_integer(binom(d, n as i64 - k));
        acc = acc + c.push_forward(k).scale(&coeff);
    }
    acc
}

/// Closed form for the image of the pencil curve `G_n` in the Jacobian:
/// `sum_{k=1}^{n} (-1)^(k-1) (1/k) binom(d, n-k) k_* C`, in the algebraic
/// quotient. `n = d` is accepted as the formal extension and gives zero.
pub fn g_n_pushforward(ctx: &GonalContext, n: u32) -> CurveClass {
    check_gn_index(ctx, n);
    g_n_combination(ctx, n).quotient(ctx.level())
}

fn phi_h_chain(ctx: &GonalContext, k: u32, l: i64) -> CurveClass {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let c = unit_curve(g);
    if k == 1 {
        // the degree-d fibre relation on the product surface
        return c.push_forward(l).scale(&rat(d)) + c.scale(&rat(d)) - c.push_forward(l + 1);
    }
    c.push_forward(l)
        .scale(&Rational::from_integer(binom(d, k as i64)))
        + recursive_gn_raw(ctx, k).scale(&rat(d))
        - phi_h_chain(ctx, k - 1, l + 1)
}

fn recursive_gn_raw(ctx: &GonalContext, n: u32) -> CurveClass {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    let c = unit_curve(g);
    if n == 1 {
        return c;
    }
    // incidence-curve image: the alternating chain bottoms out at 2_*C
    let incidence = if n == 2 {
        c.push_forward(2)
    } else {
        phi_h_chain(ctx, n - 2, 2)
    };
    let head = c.scale(&Rational::from_integer(binom(d, n as i64 - 1)));
    (head + recursive_gn_raw(ctx, n - 1).scale(&rat(d)) - incidence).scale(&frac(1, n as i64))
}

/// The same pushforward computed by literally running the induction: the
/// quotient step expressing `G_n` through `G_(n-1)` and the alternating
/// chain of pencil-completion curves. Must agree with [`g_n_pushforward`].
pub fn recursive_gn(ctx: &GonalContext, n: u32) -> CurveClass {
    check_gn_index(ctx, n);
    recursive_gn_raw(ctx, n).quotient(ctx.level())
}

/// Output of [`pi_combination`]: the operator `L`, the two constants, and
/// the residuals of the two congruences (zero when the congruence holds).
#[derive(Clone, Debug)]
pub struct PiCombination {
    pub operator: RingElement,
    pub c: Rational,
    pub c1: Rational,
    pub first_residual: RingElement,
    pub second_residual: RingElement,
}

impl PiCombination {
    pub fn first_holds(&self) -> bool {
        self.first_residual.is_zero()
    }

    pub fn second_holds(&self) -> bool {
        self.second_residual.is_zero()
    }

    pub fn verified(&self) -> bool {
        self.first_holds() && self.second_holds()
    }
}

/// In the ring modulo `(gamma(1)-gamma(0))^{*(d+1)}`, form
/// `L = gamma(-1) . ((1/(d-1)) Q_0 - (1/d) Q_{-1})` from the relation
/// operators `Q_n = P_n + F_d` and solve the two congruences
///
/// * `L = c gamma(0) + log gamma(1)`
/// * `L = sum_{n=1}^{d} (-1)^(n-1) (1/n) binom(d,n) gamma(n) + c1 gamma(0)`
///
/// for the exact constants. `L` acts as the identity on the weight-1 line,
/// which combined with the pencil relations forces `C_(1)` to vanish.
pub fn pi_combination(ctx: &GonalContext) -> PiCombination {
    let g = ctx.genus;
    let d = ctx.gonality as i64;
    assert!(d >= 3, "the projector combination needs gonality >= 3");
    let mask = IdealMask::new(g, ctx.gonality + 1);

    let correction = f_d_operator(ctx);
    let q0 = p_n_operator(ctx, 0) + &correction;
    let qm1 = p_n_operator(ctx, -1) + &correction;
    let combo = q0.scale(&frac(1, d - 1)) - qm1.scale(&frac(1, d));
    let operator = gamma(g, -1).compose(&combo);

    let unit_index = (2 * g) as usize; // gamma(0) = pi(2g)
    let r1 = (&operator - &log_gamma1(g)).reduce_mod(&mask);
    let c = r1.pi_coeffs()[unit_index].clone();
    let first_residual = r1 - pi(g, 2 * g).scale(&c);

    let mut series = RingElement::zero(g);
    for n in 1..=d {
        let sign = if (n - 1) % 2 == 0 { 1 } else { -1 };
        let coeff = frac(sign, n) * Rational::from_integer(binom(d, n));
        series = series + gamma(g, n).scale(&coeff);
    }
    let r2 = (&operator - &series).reduce_mod(&mask);
    let c1 = r2.pi_coeffs()[unit_index].clone();
    let second_residual = r2 - pi(g, 2 * g).scale(&c1);

    PiCombination {
        operator,
        c,
        c1,
        first_residual,
        second_residual,
    }
}

/// A combination of the spanning pushforwards `C`, `C^-` and `2_*C`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PushCombo {
    pub c: Rational,
    pub c_minus: Rational,
    pub two_c: Rational,
}

impl fmt::Display for PushCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let combo = crate::render::linear_combo([
            (self.c.clone(), "C".to_string()),
            (self.c_minus.clone(), "C^-".to_string()),
            (self.two_c.clone(), "2_*C".to_string()),
        ]);
        f.write_str(&combo)
    }
}

/// Exact expressions of the weight components `C_(i)` in pushforwards of
/// the curve, for trigonal (`d = 3`) and tetragonal (`d = 4`) curves.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClosedForms {
    pub gonality: u32,
    /// `(weight, combination)`, weights `2..=d`.
    pub by_weight: Vec<(u32, PushCombo)>,
}

/// Solve the linear system expressing each surviving `C_(i)` in the
/// pushforwards `{C, C^-}` (trigonal) or `{C, C^-, 2_*C}` (tetragonal).
pub fn closed_forms(ctx: &GonalContext) -> ClosedForms {
    let d = ctx.gonality;
    assert!(
        d == 3 || d == 4,
        "closed forms are available for gonality 3 and 4 only"
    );
    let nodes: &[i64] = if d == 3 { &[1, -1] } else { &[1, -1, 2] };
    let mat: Vec<Vec<Rational>> = nodes
        .iter()
        .map(|&n| (2..=d).map(|i| int_pow(n, i)).collect())
        .collect();
    let inv = linalg::invert(&mat).expect("distinct non-zero nodes give a non-singular system");
    let by_weight = (2..=d)
        .map(|i| {
            let row = &inv[(i - 2) as usize];
            let combo = PushCombo {
                c: row[0].clone(),
                c_minus: row[1].clone(),
                two_c: row.get(2).cloned().unwrap_or_else(Rational::zero),
            };
            (i, combo)
        })
        .collect();
    ClosedForms {
        gonality: d,
        by_weight,
    }
}

/// Exact coefficients expressing `n_*C` in the basis `{n_j * C}` inside the
/// algebraic quotient. Solvability is guaranteed by the non-vanishing of the
/// row-scaled Vandermonde determinant.
pub fn express_nstar(ctx: &GonalContext, n: i64, basis: &[i64]) -> Vec<Rational> {
    let d = ctx.gonality;
    assert_eq!(
        basis.len(),
        d as usize - 1,
        "need d-1 basis pushforwards for gonality {d}"
    );
    for (a, &s) in basis.iter().enumerate() {
        assert!(s != 0, "basis entries must be non-zero");
        assert!(
            basis[a + 1..].iter().all(|&t| t != s),
            "basis entries must be distinct"
        );
    }
    // rows indexed by weight i = 2..=d, columns by basis node
    let mat: Vec<Vec<Rational>> = (2..=d)
        .map(|i| basis.iter().map(|&b| int_pow(b, i)).collect())
        .collect();
    let rhs: Vec<Rational> = (2..=d).map(|i| int_pow(n, i)).collect();
    linalg::solve(&mat, &rhs).expect("row-scaled Vandermonde system cannot be singular")
}
