//! Dense univariate polynomials over the rationals: exact arithmetic,
//! greatest common divisors, squarefree decomposition, and refinement of
//! several factor lists into a pairwise coprime basis.
//!
//! Also provides coprimality of bivariate polynomials, viewed as univariate
//! polynomials in x whose coefficients are polynomials in y, via a primitive
//! pseudo-remainder sequence.

use num_traits::{One, Zero};

use crate::rat::Rat;

/// Polynomial in one variable with exact rational coefficients.
///
/// `coeffs[i]` multiplies `t^i`; the last entry is nonzero; the zero
/// polynomial stores an empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with the convention that constants (including zero) have degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        UniPoly::from_coeffs(out)
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> UniPoly {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        UniPoly::from_coeffs(out)
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(i.into()))
            .collect();
        UniPoly::from_coeffs(out)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: returns `(q, r)` with `self = q*d + r` and
    /// `deg r < deg d`. Panics if `d` is zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.coeffs.len() < d.coeffs.len() {
            return (UniPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let dn = d.coeffs.len();
        let lc = d.coeffs.last().unwrap();
        let mut q = vec![Rat::zero(); rem.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + dn - 1].clone();
            if top.is_zero() {
                continue;
            }
            let c = top / lc;
            for j in 0..dn {
                let t = &d.coeffs[j] * &c;
                rem[k + j] -= t;
            }
            q[k] = c;
        }
        (UniPoly::from_coeffs(q), UniPoly::from_coeffs(rem))
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, d: &UniPoly) -> UniPoly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "division was not exact");
        q
    }
}

/// Monic greatest common divisor; `gcd(p, 0) = monic(p)`.
pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut x = a.monic();
    let mut y = b.monic();
    while !y.is_zero() {
        let (_, r) = x.divrem(&y);
        x = y;
        y = r.monic();
    }
    x
}

/// Squarefree decomposition in characteristic zero.
///
/// Returns monic squarefree pairwise coprime factors of degree at least one
/// with their multiplicities, so that the input equals a constant times the
/// product of `factor^multiplicity`. Constants decompose to an empty list.
pub fn squarefree_decomposition(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    if f.is_constant() {
        return Vec::new();
    }
    let fm = f.monic();
    let g = gcd(&fm, &fm.derivative());
    if g.is_constant() {
        return vec![(fm, 1)];
    }
    let mut out = Vec::new();
    let mut b = fm.exact_div(&g);
    let mut c = fm.derivative().exact_div(&g);
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while !b.is_constant() {
        let a = gcd(&b, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a);
        c = d.exact_div(&a);
        d = c.sub(&b.derivative());
        i += 1;
    }
    out
}

/// One factor of a pairwise coprime basis, with its multiplicity in each
/// source polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedFactor {
    pub poly: UniPoly,
    pub mults: Vec<u32>,
}

/// Refines several squarefree factorizations into one pairwise coprime basis.
///
/// `sources[i]` is a list of monic squarefree factors with multiplicities
/// (the factors within one source must be pairwise coprime, as produced by
/// `squarefree_decomposition`). The result is a list of monic pairwise
/// coprime polynomials such that source `i` equals the product of
/// `poly^mults[i]` over the basis.
pub fn gcd_free_refine(sources: &[Vec<(UniPoly, u32)>]) -> Vec<RefinedFactor> {
    let n = sources.len();
    let mut basis: Vec<RefinedFactor> = Vec::new();
    for (src, factors) in sources.iter().enumerate() {
        for (g0, e) in factors {
            let mut g = g0.monic();
            let mut slot = 0;
            while slot < basis.len() && !g.is_constant() {
                let c = gcd(&g, &basis[slot].poly);
                if !c.is_constant() {
                    let rest = basis[slot].poly.exact_div(&c);
                    let old_mults = basis[slot].mults.clone();
                    basis[slot].poly = c.clone();
                    basis[slot].mults[src] += e;
                    if !rest.is_constant() {
                        basis.push(RefinedFactor {
                            poly: rest,
                            mults: old_mults,
                        });
                    }
                    g = g.exact_div(&c);
                }
                slot += 1;
            }
            if !g.is_constant() {
                let mut mults = vec![0u32; n];
                mults[src] = *e;
                basis.push(RefinedFactor { poly: g, mults });
            }
        }
    }
    basis
}

/// Bivariate polynomial represented as coefficients in y of powers of x:
/// entry `i` is the coefficient polynomial (in y) of `x^i`.
pub(crate) type XPoly = Vec<UniPoly>;

fn xp_trim(v: &mut XPoly) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn xp_is_zero(v: &XPoly) -> bool {
    v.is_empty()
}

fn xp_content(v: &XPoly) -> UniPoly {
    let mut g = UniPoly::zero();
    for c in v {
        g = gcd(&g, c);
    }
    g
}

fn xp_primitive(v: &XPoly) -> XPoly {
    if xp_is_zero(v) {
        return Vec::new();
    }
    let c = xp_content(v);
    v.iter().map(|a| a.exact_div(&c)).collect()
}

/// Pseudo-remainder of `a` by `b` in x; requires `b` nonzero.
fn xp_pseudo_rem(a: &XPoly, b: &XPoly) -> XPoly {
    let n = b.len() - 1;
    let lead_b = b.last().unwrap().clone();
    let mut r = a.clone();
    xp_trim(&mut r);
    while !xp_is_zero(&r) && r.len() - 1 >= n {
        let k = r.len() - 1 - n;
        let lead_r = r.last().unwrap().clone();
        let mut next: XPoly = r.iter().map(|c| c.mul(&lead_b)).collect();
        for (j, bc) in b.iter().enumerate() {
            let t = bc.mul(&lead_r);
            next[k + j] = next[k + j].sub(&t);
        }
        xp_trim(&mut next);
        r = next;
    }
    r
}

/// Whether two bivariate polynomials have no common factor of positive degree.
pub(crate) fn xp_coprime(f: &XPoly, g: &XPoly) -> bool {
    let mut f = f.clone();
    let mut g = g.clone();
    xp_trim(&mut f);
    xp_trim(&mut g);
    assert!(!xp_is_zero(&f) && !xp_is_zero(&g), "coprimality of zero");
    let content_gcd = gcd(&xp_content(&f), &xp_content(&g));
    if !content_gcd.is_constant() {
        return false;
    }
    let mut a = xp_primitive(&f);
    let mut b = xp_primitive(&g);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !xp_is_zero(&b) {
        if b.len() == 1 {
            return true;
        }
        let r = xp_pseudo_rem(&a, &b);
        let r = xp_primitive(&r);
        a = b;
        b = r;
    }
    a.len() == 1
}
