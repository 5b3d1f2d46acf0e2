//! Exact Gröbner-basis oracle over the rationals: initial ideals, generic
//! initial ideals, and reduction numbers of arbitrary linear forms.

mod buchberger;
mod generic;
mod linalg;
mod poly;

pub use buchberger::{buchberger, is_groebner_basis, reduce};
pub use generic::{random_linear_forms, variable_forms, CoordinateChange, MatrixKind};
pub use linalg::{degree_rank, determinant, rank, DegreeSpace, Echelon};
pub use poly::{RationalPoly, RationalPolyIdeal};

use num::{BigUint, ToPrimitive};

use crate::binom::monomial_count;
use crate::borel::is_borel_fixed;
use crate::error::{Error, Result};
use crate::hilbert::hilbert;
use crate::ideal::MonomialIdeal;
use crate::monomial::TermOrder;
use crate::reduction::{rs_borel, Hypothesis};

/// Default bound on the entries of random matrices and linear forms.
pub const DEFAULT_ENTRY_BOUND: i64 = 97;

/// Seeds and entry bound for the randomized computations. Every result is
/// computed for `seed` and for a second seed derived from it, and the two
/// must agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GinOptions {
    pub seed: u64,
    pub entry_bound: i64,
    pub kind: MatrixKind,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: 1,
            entry_bound: DEFAULT_ENTRY_BOUND,
            kind: MatrixKind::DenseRandom,
        }
    }
}

impl GinOptions {
    pub fn with_seed(seed: u64) -> Self {
        GinOptions {
            seed,
            ..Self::default()
        }
    }

    pub fn seeds(&self) -> [u64; 2] {
        [self.seed, self.seed.wrapping_add(0x9E37_79B9_7F4A_7C15)]
    }

    /// Same seeds, entry bound multiplied by ten.
    pub fn widened(&self) -> Self {
        GinOptions {
            entry_bound: self.entry_bound.saturating_mul(10),
            ..*self
        }
    }
}

fn lead_ideal(ideal: &RationalPolyIdeal, order: TermOrder) -> MonomialIdeal {
    let gb = buchberger(ideal, order);
    let leads = gb
        .iter()
        .map(|g| g.leading_monomial(order).expect("basis elements are nonzero"));
    MonomialIdeal::minimalize(leads, ideal.context()).expect("homogeneous ideals of positive degree are proper")
}

/// Degree horizon for Hilbert-function cross-checks.
pub fn check_horizon(ideal: &RationalPolyIdeal) -> u64 {
    (2 * ideal.max_degree()).max(12)
}

/// `dim (R/I)_t` by exact row reduction.
pub fn hilbert_by_rank(ideal: &RationalPolyIdeal, t: u64) -> BigUint {
    let total = monomial_count(ideal.n(), t);
    total - BigUint::from(degree_rank(ideal.n(), ideal.generators(), t))
}

fn assert_same_hilbert(mono: &MonomialIdeal, ideal: &RationalPolyIdeal) {
    for t in 0..=check_horizon(ideal) {
        assert_eq!(
            hilbert(mono, t),
            hilbert_by_rank(ideal, t),
            "initial ideal {mono} and {ideal} differ in degree {t}"
        );
    }
}

/// `in(I)` under `order`, cross-checked against row reduction.
pub fn initial_ideal(ideal: &RationalPolyIdeal, order: TermOrder) -> MonomialIdeal {
    let init = lead_ideal(ideal, order);
    assert_same_hilbert(&init, ideal);
    init
}

/// Generic initial ideal under grevlex: `in(g I)` for random dense `g`,
/// required to agree across two seeds.
pub fn gin(ideal: &RationalPolyIdeal, options: &GinOptions) -> Result<MonomialIdeal> {
    let [a, b] = options.seeds();
    let sample = |seed| {
        let g = CoordinateChange::draw(ideal.n(), seed, options.entry_bound, options.kind);
        lead_ideal(&g.apply_ideal(ideal), TermOrder::Grevlex)
    };
    let first = sample(a);
    let second = sample(b);
    if first != second {
        return Err(Error::NonGeneric(format!(
            "seeds {a} and {b} give different initial ideals {first} and {second}"
        )));
    }
    if !is_borel_fixed(&first) {
        return Err(Error::NonGeneric(format!(
            "initial ideal {first} is not Borel-fixed"
        )));
    }
    assert_same_hilbert(&first, ideal);
    Ok(first)
}

/// `gin` of a monomial ideal, computed over the rationals.
pub fn gin_monomial(ideal: &MonomialIdeal, options: &GinOptions) -> Result<MonomialIdeal> {
    gin(&RationalPolyIdeal::from_monomial_ideal(ideal), options)
}

/// `r_s(R/I)` over the rationals through `gin(I)`.
pub fn rs_via_gin(ideal: &MonomialIdeal, s: usize, options: &GinOptions) -> Result<u64> {
    let g = gin_monomial(ideal, options)?;
    Ok(rs_borel(&g, s, Hypothesis::Trust)?.r)
}

/// Least `r` with `(Q + I)_{r+1} = R_{r+1}` for `Q` generated by `forms`.
pub fn rs_linear_forms(ideal: &RationalPolyIdeal, forms: &[RationalPoly]) -> Result<u64> {
    let n = ideal.n();
    if forms.len() > n {
        return Err(Error::TooManyForms { s: forms.len(), n });
    }
    for f in forms {
        if f.n() != n {
            return Err(Error::ContextMismatch {
                expected: n,
                found: f.n(),
            });
        }
        if f.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidContext(format!("{f} is not a nonzero linear form")));
        }
    }
    let sum = ideal.with_generators(forms)?;
    let init = lead_ideal(&sum, TermOrder::Grevlex);
    let dim = init.krull_dim();
    if dim > 0 {
        let degree = init.max_degree() + 1;
        let defect = hilbert(&init, degree).to_u64().unwrap_or(u64::MAX);
        return Err(Error::FormsNotAReduction { dim, defect, degree });
    }
    // First degree where the initial ideal contains every monomial.
    let mut cap = 1;
    while !hilbert(&init, cap).eq(&BigUint::from(0u32)) {
        cap += 1;
    }
    for t in 1..=cap {
        let full = monomial_count(n, t);
        if BigUint::from(degree_rank(n, sum.generators(), t)) == full {
            assert_eq!(t, cap, "row reduction and Gröbner basis disagree for {sum}");
            return Ok(t - 1);
        }
    }
    unreachable!("degree {cap} is full by the Gröbner basis of {sum}")
}

/// `r_s(R/I)` through `s` random linear forms, agreeing across two seeds.
pub fn rs_generic(ideal: &RationalPolyIdeal, s: usize, options: &GinOptions) -> Result<u64> {
    let n = ideal.n();
    if s > n {
        return Err(Error::TooManyForms { s, n });
    }
    let dim = lead_ideal(ideal, TermOrder::Grevlex).krull_dim();
    if s < dim {
        return Err(Error::NoSReduction { s, dim });
    }
    let [a, b] = options.seeds();
    let run = |seed| match rs_linear_forms(ideal, &random_linear_forms(n, s, seed, options.entry_bound)) {
        Err(Error::FormsNotAReduction { .. }) => Err(Error::NonGeneric(format!(
            "the forms drawn from seed {seed} are not a reduction"
        ))),
        other => other,
    };
    let (ra, rb) = (run(a)?, run(b)?);
    if ra != rb {
        return Err(Error::NonGeneric(format!(
            "seeds {a} and {b} give reduction numbers {ra} and {rb}"
        )));
    }
    Ok(ra)
}
