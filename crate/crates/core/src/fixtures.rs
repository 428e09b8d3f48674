//! Brute-force fixture generation: exhaustive enumeration of candidate
//! tensors, products and endomorphism pairs with entries drawn from a finite
//! coefficient set, filtered by the exact checks.
//!
//! Output order is deterministic: the coefficient set is sorted and
//! deduplicated, candidates are visited lexicographically, and survivors are
//! emitted in visit order. The filters for tensors run on integers rescaled
//! by the common denominator (every identity involved is homogeneous in the
//! candidate, so rescaling preserves zero-ness); survivors are rebuilt over
//! exact rationals and re-verified before being returned.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::bialg::{check_endo_lie_bialgebra, LieBialgebra};
use crate::cybe::{check_sym_invariance, cybe_lhs, RMatrix};
use crate::error::{Error, Result};
use crate::kernel::{LinearMap, Scalar, Tensor2};
use crate::lie::LieAlgebra;
use crate::oop_prelie::{check_prelie, PreLieAlgebra};

/// Hard ceiling on the number of candidates a single enumeration may visit.
pub const MAX_CANDIDATES: u64 = 1 << 24;

fn normalized_coeffs(coeffs: &[Scalar]) -> Result<Vec<Scalar>> {
    if coeffs.is_empty() {
        return Err(Error::InvalidInput("empty coefficient set".into()));
    }
    let mut sorted = coeffs.to_vec();
    sorted.sort();
    sorted.dedup();
    Ok(sorted)
}

fn candidate_count(base: usize, slots: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..slots {
        total = total
            .checked_mul(base as u64)
            .filter(|&t| t <= MAX_CANDIDATES)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "enumeration bound exceeded: {base}^{slots} candidates is over the \
                     {MAX_CANDIDATES} ceiling; shrink the dimension or the coefficient set"
                ))
            })?;
    }
    Ok(total)
}

/// Visit every assignment of `slots` positions over `base` symbols in
/// lexicographic order, reporting the digit vector.
fn for_each_assignment(base: usize, slots: usize, mut visit: impl FnMut(&[usize])) {
    let mut digits = vec![0usize; slots];
    loop {
        visit(&digits);
        let mut pos = slots;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < base {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Common denominator of a scalar family, as an `i64` scale when small
/// enough for the integer fast path.
fn common_scale(values: impl Iterator<Item = Scalar>) -> Option<i64> {
    let mut lcm = BigInt::one();
    for v in values {
        lcm = lcm.lcm(v.denom());
    }
    lcm.to_i64()
}

fn scaled(values: &[Scalar], scale: i64) -> Option<Vec<i64>> {
    // keep scaled magnitudes small enough that degree-2 filter sums stay
    // far from i64 range; otherwise fall back to exact arithmetic
    const LIMIT: i64 = 1 << 20;
    values
        .iter()
        .map(|v| v.to_scaled_i64(scale).filter(|x| x.abs() <= LIMIT))
        .collect()
}

struct IntAlgebra {
    n: usize,
    c: Vec<i64>,
}

impl IntAlgebra {
    fn of(alg: &LieAlgebra) -> Option<IntAlgebra> {
        let n = alg.dim();
        let mut all = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    all.push(alg.c(i, j, k).clone());
                }
            }
        }
        let scale = common_scale(all.iter().cloned())?;
        Some(IntAlgebra {
            n,
            c: scaled(&all, scale)?,
        })
    }

    fn c(&self, i: usize, j: usize, k: usize) -> i64 {
        self.c[(i * self.n + j) * self.n + k]
    }
}

fn int_sym_invariance_holds(alg: &IntAlgebra, r: &[i64]) -> bool {
    let n = alg.n;
    let s = |a: usize, b: usize| r[a * n + b] + r[b * n + a];
    for m in 0..n {
        for p in 0..n {
            for q in 0..n {
                let mut v = 0i64;
                for a in 0..n {
                    v += alg.c(m, a, p) * s(a, q);
                    v += alg.c(m, a, q) * s(p, a);
                }
                if v != 0 {
                    return false;
                }
            }
        }
    }
    true
}

fn int_cybe_holds(alg: &IntAlgebra, r: &[i64]) -> bool {
    let n = alg.n;
    let at = |a: usize, b: usize| r[a * n + b];
    for p in 0..n {
        for q in 0..n {
            for s in 0..n {
                let mut v = 0i64;
                for a in 0..n {
                    for c in 0..n {
                        v += at(a, q) * at(c, s) * alg.c(a, c, p);
                        v += at(p, a) * at(q, c) * alg.c(a, c, s);
                        v += at(p, a) * at(c, s) * alg.c(a, c, q);
                    }
                }
                if v != 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Every 2-tensor with entries in `coeffs` satisfying both the symmetric
/// part invariance and the Yang-Baxter equation on the given algebra. Skew
/// candidates are exactly the skew-symmetric members of the output.
pub fn gen_cybe_fixtures(alg: &LieAlgebra, coeffs: &[Scalar]) -> Result<Vec<RMatrix>> {
    let coeffs = normalized_coeffs(coeffs)?;
    let n = alg.dim();
    candidate_count(coeffs.len(), n * n)?;

    let fast = IntAlgebra::of(alg).and_then(|ia| {
        let scale = common_scale(coeffs.iter().cloned())?;
        let ints = scaled(&coeffs, scale)?;
        Some((ia, ints))
    });

    let mut out = Vec::new();
    let mut keep = |digits: &[usize]| -> Result<()> {
        let tensor = Tensor2::from_fn(n, n, |i, j| coeffs[digits[i * n + j]].clone());
        let rm = RMatrix::new(alg.clone(), tensor)?;
        if check_sym_invariance(&rm).pass() && cybe_lhs(&rm).is_zero() {
            out.push(rm);
        }
        Ok(())
    };

    let mut first_err = None;
    match &fast {
        Some((ia, ints)) => {
            let mut r_int = vec![0i64; n * n];
            for_each_assignment(coeffs.len(), n * n, |digits| {
                for (slot, &d) in digits.iter().enumerate() {
                    r_int[slot] = ints[d];
                }
                if int_sym_invariance_holds(ia, &r_int) && int_cybe_holds(ia, &r_int) {
                    if let Err(e) = keep(digits) {
                        first_err.get_or_insert(e);
                    }
                }
            });
        }
        None => {
            for_each_assignment(coeffs.len(), n * n, |digits| {
                if let Err(e) = keep(digits) {
                    first_err.get_or_insert(e);
                }
            });
        }
    }
    match first_err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

fn int_left_symmetry_holds(p: &[i64], n: usize) -> bool {
    let at = |i: usize, j: usize, k: usize| p[(i * n + j) * n + k];
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                for m in 0..n {
                    let mut v = 0i64;
                    for l in 0..n {
                        v += at(j, k, l) * at(i, l, m) - at(i, j, l) * at(l, k, m)
                            - at(i, k, l) * at(j, l, m)
                            + at(j, i, l) * at(l, k, m);
                    }
                    if v != 0 {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every product table with entries in `coeffs` satisfying left-symmetry.
pub fn gen_prelie_fixtures(dim: usize, coeffs: &[Scalar]) -> Result<Vec<PreLieAlgebra>> {
    let coeffs = normalized_coeffs(coeffs)?;
    let slots = dim * dim * dim;
    candidate_count(coeffs.len(), slots)?;

    let ints = common_scale(coeffs.iter().cloned()).and_then(|scale| scaled(&coeffs, scale));

    let mut out = Vec::new();
    let mut keep = |digits: &[usize]| {
        let p: Vec<Scalar> = digits.iter().map(|&d| coeffs[d].clone()).collect();
        let alg = PreLieAlgebra::new(dim, p).expect("slot count matches");
        if check_prelie(&alg).pass() {
            out.push(alg);
        }
    };

    match &ints {
        Some(ints) => {
            let mut p_int = vec![0i64; slots];
            for_each_assignment(coeffs.len(), slots, |digits| {
                for (slot, &d) in digits.iter().enumerate() {
                    p_int[slot] = ints[d];
                }
                if int_left_symmetry_holds(&p_int, dim) {
                    keep(digits);
                }
            });
        }
        None => for_each_assignment(coeffs.len(), slots, keep),
    }
    Ok(out)
}

/// Every pair `(φ, ψ)` with entries in `coeffs` that is an endo structure on
/// the given bialgebra.
pub fn gen_endo_pairs(
    b: &LieBialgebra,
    coeffs: &[Scalar],
) -> Result<Vec<(LinearMap, LinearMap)>> {
    let coeffs = normalized_coeffs(coeffs)?;
    let n = b.dim();
    let slots = 2 * n * n;
    candidate_count(coeffs.len(), slots)?;

    let mut out = Vec::new();
    let mut first_err = None;
    for_each_assignment(coeffs.len(), slots, |digits| {
        let phi = LinearMap::from_fn(n, n, |i, j| coeffs[digits[i * n + j]].clone());
        let psi = LinearMap::from_fn(n, n, |i, j| coeffs[digits[n * n + i * n + j]].clone());
        match check_endo_lie_bialgebra(b, &phi, &psi) {
            Ok(report) => {
                if report.pass() {
                    out.push((phi, psi));
                }
            }
            Err(e) => {
                first_err.get_or_insert(e);
            }
        }
    });
    match first_err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Every square map with entries in `coeffs`, in enumeration order. Used for
/// hom-set sweeps in the acceptance suite.
pub fn all_square_maps(n: usize, coeffs: &[Scalar]) -> Result<Vec<LinearMap>> {
    let coeffs = normalized_coeffs(coeffs)?;
    candidate_count(coeffs.len(), n * n)?;
    let mut out = Vec::new();
    for_each_assignment(coeffs.len(), n * n, |digits| {
        out.push(LinearMap::from_fn(n, n, |i, j| {
            coeffs[digits[i * n + j]].clone()
        }));
    });
    Ok(out)
}

/// `{−1, 0, 1}` as scalars.
pub fn unit_coeffs() -> Vec<Scalar> {
    vec![Scalar::from_int(-1), Scalar::zero(), Scalar::from_int(1)]
}
