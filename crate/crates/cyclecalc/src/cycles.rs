//! Weight-graded tautological cycle classes on the Jacobian.
//!
//! A curve class is stored as its coefficients on the formal generators
//! `C_(i)` — the weight-`i` projections of the curve, on which the
//! multiplication operators act as `n^i`. The generators are independent by
//! default (the generic-curve model); relations are imposed only through
//! explicit equivalence-level quotients, realized as weight-support
//! truncations. The weight-1 slot exists but is pinned to zero.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::binom::factorial;
use crate::linalg;
use crate::rational::{int_pow, rat, Rational};
use crate::render;
use crate::ring::RingElement;

/// Successively coarser quotients of the Chow group, realized as
/// weight-support truncations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EquivalenceLevel {
    /// No quotient.
    Chow,
    /// Only the even weight `2d'` of a `d'`-cycle survives.
    Homological,
    /// Weights `2d'` and `2d'+1` survive.
    AbelJacobi,
    /// Quotient by the relations of a degree-`d` pencil: weights `2..=d`
    /// of a curve class survive. Requires `d >= 2`.
    Algebraic(u32),
}

impl EquivalenceLevel {
    fn validate(self) {
        if let EquivalenceLevel::Algebraic(d) = self {
            assert!(d >= 2, "algebraic level requires gonality >= 2");
        }
    }
}

/// A tautological curve class `sum c_i C_(i)`, `i = 1..=g+1`, with `c_1 = 0`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveClass {
    genus: u32,
    /// `coeffs[i-1]` is the coefficient of `C_(i)`.
    coeffs: Vec<Rational>,
}

impl CurveClass {
    pub fn zero(genus: u32) -> Self {
        assert!(genus >= 1, "genus must be positive");
        CurveClass {
            genus,
            coeffs: vec![Rational::zero(); genus as usize + 1],
        }
    }

    pub fn from_weight_coeffs(genus: u32, coeffs: Vec<Rational>) -> Self {
        assert!(genus >= 1, "genus must be positive");
        assert_eq!(coeffs.len(), genus as usize + 1, "need g+1 coefficients");
        assert!(
            coeffs[0].is_zero(),
            "the weight-1 component of a curve class vanishes identically"
        );
        CurveClass { genus, coeffs }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Coefficient of `C_(weight)`, `1 <= weight <= g+1`.
    pub fn weight_coeff(&self, weight: u32) -> &Rational {
        assert!(
            (1..=self.genus + 1).contains(&weight),
            "weight out of range"
        );
        &self.coeffs[weight as usize - 1]
    }

    /// All coefficients, index `i` holding the weight-`(i+1)` coefficient.
    pub fn weight_coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        CurveClass {
            genus: self.genus,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Pushforward along multiplication by `n`: the eigen-action
    /// `c_i -> n^i c_i`.
    pub fn push_forward(&self, n: i64) -> Self {
        CurveClass {
            genus: self.genus,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(idx, c)| c * int_pow(n, idx as u32 + 1))
                .collect(),
        }
    }

    /// Weight-support truncation for the given equivalence level.
    pub fn quotient(&self, level: EquivalenceLevel) -> Self {
        level.validate();
        let keep = |weight: u32| match level {
            EquivalenceLevel::Chow => true,
            EquivalenceLevel::Homological => weight == 2,
            EquivalenceLevel::AbelJacobi => weight == 2 || weight == 3,
            EquivalenceLevel::Algebraic(d) => (2..=d).contains(&weight),
        };
        CurveClass {
            genus: self.genus,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(idx, c)| {
                    if keep(idx as u32 + 1) {
                        c.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect(),
        }
    }
}

/// The curve class itself: `C_(2) + C_(3) + ... + C_(g+1)`.
pub fn unit_curve(genus: u32) -> CurveClass {
    let mut coeffs = vec![rat(1); genus as usize + 1];
    coeffs[0] = Rational::zero();
    CurveClass { genus, coeffs }
}

/// Action of a correspondence on a curve class: the weight-`i` line is
/// scaled by the operator's projector coordinate at index `2g - i`.
pub fn apply_operator(op: &RingElement, cc: &CurveClass) -> CurveClass {
    assert_eq!(op.genus(), cc.genus, "genus mismatch");
    let pi = op.pi_coeffs();
    let g = cc.genus;
    CurveClass {
        genus: g,
        coeffs: cc
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let weight = idx as u32 + 1;
                c * &pi[(2 * g - weight) as usize]
            })
            .collect(),
    }
}

/// Recover the weight components `C_(i)` of `cc` as exact combinations of
/// its pushforwards at the given sample points.
///
/// Uses the first `g` samples; they must be distinct and non-zero, which
/// makes the (row-scaled) Vandermonde system provably non-singular. The
/// returned components are ordered by weight `2..=g+1` and sum back to `cc`.
pub fn decompose_by_pushforwards(cc: &CurveClass, samples: &[i64]) -> Vec<CurveClass> {
    let g = cc.genus as usize;
    assert!(
        samples.len() >= g,
        "need at least {g} samples for the possibly-nonzero weights"
    );
    let samples = &samples[..g];
    for (a, &s) in samples.iter().enumerate() {
        assert!(s != 0, "samples must be non-zero");
        assert!(
            samples[a + 1..].iter().all(|&t| t != s),
            "samples must be distinct"
        );
    }
    let mat: Vec<Vec<Rational>> = samples
        .iter()
        .map(|&n| (2..=g as u32 + 1).map(|w| int_pow(n, w)).collect())
        .collect();
    let inv = linalg::invert(&mat)
        .expect("distinct non-zero samples over a contiguous weight range cannot be singular");
    let pushed: Vec<CurveClass> = samples.iter().map(|&n| cc.push_forward(n)).collect();
    (0..g)
        .map(|t| {
            let mut component = CurveClass::zero(cc.genus);
            for (j, p) in pushed.iter().enumerate() {
                component = &component + &p.scale(&inv[t][j]);
            }
            component
        })
        .collect()
}

/// Rank over `Q` of the classes' coefficient matrix after quotienting.
pub fn span_dim(classes: &[CurveClass], level: EquivalenceLevel) -> usize {
    if classes.is_empty() {
        return 0;
    }
    let g = classes[0].genus;
    let rows: Vec<Vec<Rational>> = classes
        .iter()
        .map(|c| {
            assert_eq!(c.genus, g, "genus mismatch");
            c.quotient(level).coeffs
        })
        .collect();
    linalg::rank(&rows)
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let combo = render::linear_combo(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(idx, c)| (c.clone(), format!("C_({})", idx + 1))),
        );
        f.write_str(&combo)
    }
}

macro_rules! curve_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&CurveClass> for &CurveClass {
            type Output = CurveClass;
            fn $method(self, rhs: &CurveClass) -> CurveClass {
                assert_eq!(self.genus, rhs.genus, "genus mismatch");
                CurveClass {
                    genus: self.genus,
                    coeffs: self
                        .coeffs
                        .iter()
                        .zip(&rhs.coeffs)
                        .map(|(a, b)| a $op b)
                        .collect(),
                }
            }
        }
        impl std::ops::$trait for CurveClass {
            type Output = CurveClass;
            fn $method(self, rhs: CurveClass) -> CurveClass {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&CurveClass> for CurveClass {
            type Output = CurveClass;
            fn $method(self, rhs: &CurveClass) -> CurveClass {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<CurveClass> for &CurveClass {
            type Output = CurveClass;
            fn $method(self, rhs: CurveClass) -> CurveClass {
                self.$method(&rhs)
            }
        }
    };
}

curve_binop!(Add, add, +);
curve_binop!(Sub, sub, -);

impl std::ops::Neg for &CurveClass {
    type Output = CurveClass;
    fn neg(self) -> CurveClass {
        self.scale(&rat(-1))
    }
}

impl std::ops::Neg for CurveClass {
    type Output = CurveClass;
    fn neg(self) -> CurveClass {
        -&self
    }
}

/// A cycle class of arbitrary dimension `d'`, graded by the weights on which
/// the multiplication operators act as `n^weight`. Support is confined to
/// `[d', d'+g]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedCycle {
    genus: u32,
    dimension: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl GradedCycle {
    pub fn new(genus: u32, dimension: u32, coeffs: BTreeMap<u32, Rational>) -> Self {
        assert!(genus >= 1, "genus must be positive");
        assert!(dimension <= genus, "cycle dimension exceeds genus");
        let coeffs: BTreeMap<u32, Rational> =
            coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        for &w in coeffs.keys() {
            assert!(
                (dimension..=dimension + genus).contains(&w),
                "weight {w} outside [{}, {}]",
                dimension,
                dimension + genus
            );
        }
        GradedCycle {
            genus,
            dimension,
            coeffs,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn push_forward(&self, n: i64) -> Self {
        GradedCycle {
            genus: self.genus,
            dimension: self.dimension,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&w, c)| (w, c * int_pow(n, w)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    pub fn quotient(&self, level: EquivalenceLevel) -> Self {
        level.validate();
        if let EquivalenceLevel::Algebraic(_) = level {
            assert_eq!(
                self.dimension, 1,
                "algebraic quotient is defined only for 1-cycles"
            );
        }
        let d = self.dimension;
        let keep = |w: u32| match level {
            EquivalenceLevel::Chow => true,
            EquivalenceLevel::Homological => w == 2 * d,
            EquivalenceLevel::AbelJacobi => w == 2 * d || w == 2 * d + 1,
            EquivalenceLevel::Algebraic(gon) => (2..=gon).contains(&w),
        };
        GradedCycle {
            genus: self.genus,
            dimension: self.dimension,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(&w, _)| keep(w))
                .map(|(&w, c)| (w, c.clone()))
                .collect(),
        }
    }
}

/// Dimension of the span of the pushforwards `n_* alpha` (over the given
/// samples) after quotienting: the rank of the coefficient matrix.
pub fn graded_span_dim(alpha: &GradedCycle, samples: &[i64], level: EquivalenceLevel) -> usize {
    let lo = alpha.dimension;
    let hi = alpha.dimension + alpha.genus;
    let rows: Vec<Vec<Rational>> = samples
        .iter()
        .map(|&n| {
            let q = alpha.push_forward(n).quotient(level);
            (lo..=hi)
                .map(|w| q.coeffs.get(&w).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    linalg::rank(&rows)
}

/// A commuting monomial in the symbols `C_(2), ..., C_(g+1)`; indices are
/// kept sorted with multiplicity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    fn new(mut indices: Vec<u32>) -> Self {
        indices.sort_unstable();
        Monomial(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    /// Sum of the indices.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut run = 0usize;
        for (pos, &i) in self.0.iter().enumerate() {
            run += 1;
            let last_of_run = pos + 1 == self.0.len() || self.0[pos + 1] != i;
            if last_of_run {
                if !first {
                    write!(f, "*")?;
                }
                if run == 1 {
                    write!(f, "C_({i})")?;
                } else {
                    write!(f, "C_({i})^{run}")?;
                }
                first = false;
                run = 0;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Exact-rational combination of monomials, grouped by weight.
pub type WeightTerms = BTreeMap<u32, BTreeMap<Monomial, Rational>>;

/// Multinomial expansion of `W_(g-d) = (1/(g-d)!) (C_(2)+...+C_(g+1))^{*(g-d)}`
/// by weight, with the weights above `2g-d` split off rather than silently
/// dropped: that vanishing is a cited bound on cycle weights, not an identity
/// of the formal model, so the discarded terms stay inspectable.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WDecomposition {
    genus: u32,
    /// `m = g - d`, the number of Pontryagin factors.
    num_factors: u32,
    /// `d`; the surviving bottom weight `2(g-d)` carries the theta label.
    theta_power: u32,
    kept: WeightTerms,
    discarded: WeightTerms,
}

impl WDecomposition {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn num_factors(&self) -> u32 {
        self.num_factors
    }

    /// The surviving weights, `2(g-d) ..= 2g-d`.
    pub fn kept(&self) -> &WeightTerms {
        &self.kept
    }

    /// Terms of weight above `2g-d`, recorded with the reason for discard.
    pub fn discarded(&self) -> &WeightTerms {
        &self.discarded
    }

    pub fn discard_note(&self) -> String {
        format!(
            "weights above {} exceed the Beauville bound for {}-cycles and vanish",
            2 * self.genus - self.theta_power,
            self.genus - self.theta_power
        )
    }

    pub fn surviving_weights(&self) -> Vec<u32> {
        self.kept.keys().copied().collect()
    }

    /// Surviving weights after additionally dropping the top weight `2g-d`,
    /// which is algebraically trivial.
    pub fn weights_mod_algebraic(&self) -> Vec<u32> {
        let top = 2 * self.genus - self.theta_power;
        self.kept.keys().copied().filter(|&w| w != top).collect()
    }

    /// The weight that carries the theta label, `2(g-d)`.
    pub fn theta_weight(&self) -> u32 {
        2 * (self.genus - self.theta_power)
    }

    /// Label attached to the bottom-weight term: it is the `d`-fold theta
    /// self-intersection divided by `d!`.
    pub fn theta_label(&self) -> String {
        format!("Θ^{}/{}!", self.theta_power, self.theta_power)
    }

    /// The bottom-weight term, `(1/(g-d)!) C_(2)^(g-d)`.
    pub fn theta_term(&self) -> &BTreeMap<Monomial, Rational> {
        &self.kept[&self.theta_weight()]
    }

    /// Scale every kept weight by the operator's eigenvalue on that weight.
    /// The discarded annotations are carried along unchanged.
    pub fn apply_operator(&self, op: &RingElement) -> WDecomposition {
        assert_eq!(op.genus(), self.genus, "genus mismatch");
        let kept = self
            .kept
            .iter()
            .map(|(&w, terms)| {
                let ev = op.weight_eigenvalue(w);
                (
                    w,
                    terms
                        .iter()
                        .map(|(m, c)| (m.clone(), c * &ev))
                        .filter(|(_, c)| !c.is_zero())
                        .collect(),
                )
            })
            .filter(|(_, terms): &(u32, BTreeMap<Monomial, Rational>)| !terms.is_empty())
            .collect();
        WDecomposition {
            kept,
            discarded: self.discarded.clone(),
            ..self.clone()
        }
    }
}

impl fmt::Display for WDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (w, terms) in &self.kept {
            if !first {
                write!(f, "; ")?;
            }
            first = false;
            let combo =
                render::linear_combo(terms.iter().map(|(m, c)| (c.clone(), m.to_string())));
            write!(f, "w{w}: {combo}")?;
            if *w == self.theta_weight() {
                write!(f, " [{}]", self.theta_label())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.discarded.is_empty() {
            let ws: Vec<String> = self.discarded.keys().map(|w| format!("w{w}")).collect();
            write!(f, " | discarded {}", ws.join(", "))?;
        }
        Ok(())
    }
}

/// Expand `W_(g-d)` as a multinomial in the commuting symbols `C_(i)`.
///
/// Every monomial has exactly `g-d` factors; a monomial's weight is the sum
/// of its indices. Weights above `2g-d` are split into the `discarded` part.
/// The weight-`2(g-d)` term is exactly `(1/(g-d)!) C_(2)^(g-d)` and carries
/// the theta label.
pub fn decompose_w(genus: u32, d: u32) -> WDecomposition {
    assert!(
        (1..genus).contains(&d),
        "theta power d must satisfy 1 <= d <= g-1"
    );
    let m = genus - d;
    let top_weight = 2 * genus - d;
    let mut kept: WeightTerms = BTreeMap::new();
    let mut discarded: WeightTerms = BTreeMap::new();

    // enumerate multisets of size m from {2..=g+1}
    let mut stack: Vec<u32> = Vec::with_capacity(m as usize);
    fn recurse(
        lo: u32,
        hi: u32,
        remaining: u32,
        stack: &mut Vec<u32>,
        kept: &mut WeightTerms,
        discarded: &mut WeightTerms,
        top_weight: u32,
    ) {
        if remaining == 0 {
            let monomial = Monomial::new(stack.clone());
            // 1/m! times the multinomial coefficient = 1 / prod(mult_j!)
            let mut denom = rat(1);
            let mut run = 0u32;
            for (pos, &i) in stack.iter().enumerate() {
                run += 1;
                if pos + 1 == stack.len() || stack[pos + 1] != i {
                    denom = denom * Rational::from_integer(factorial(run));
                    run = 0;
                }
            }
            let coeff = rat(1) / denom;
            let weight = monomial.weight();
            let bucket = if weight <= top_weight { kept } else { discarded };
            bucket.entry(weight).or_default().insert(monomial, coeff);
            return;
        }
        for i in lo..=hi {
            stack.push(i);
            recurse(i, hi, remaining - 1, stack, kept, discarded, top_weight);
            stack.pop();
        }
    }
    recurse(
        2,
        genus + 1,
        m,
        &mut stack,
        &mut kept,
        &mut discarded,
        top_weight,
    );

    WDecomposition {
        genus,
        num_factors: m,
        theta_power: d,
        kept,
        discarded,
    }
}

/// The third Pontryagin difference of the curve,
/// `3_*C - 3*2_*C + 3C = (gamma(1)-gamma(0))^{*3} C`, with weight-`i`
/// coefficient `3^i - 3*2^i + 3`.
pub fn gross_schoen(genus: u32) -> CurveClass {
    assert!(genus >= 3, "the triple difference cycle needs genus >= 3");
    let op = (crate::ring::gamma(genus, 1) - crate::ring::gamma(genus, 0)).pontryagin_pow(3);
    apply_operator(&op, &unit_curve(genus))
}
