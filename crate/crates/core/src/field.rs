//! Finite fields GF(q), q = p^k, with exact table-backed arithmetic.
//!
//! Elements are dense indices 0..q. An index encodes the coefficient vector
//! of a polynomial of degree < k in base p (index = sum c_i * p^i), so 0 is
//! the additive identity and 1 the multiplicative identity. Extension fields
//! are the quotient by a monic irreducible modulus; when no modulus is given,
//! the lexicographically least monic irreducible polynomial is chosen, with
//! coefficients compared from the highest degree down. Construction is
//! deterministic: the same spec always yields byte-identical tables.

use crate::error::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Largest supported field order; tables are q*q entries.
const MAX_ORDER: u64 = 1024;

/// Decompose q as p^k with p prime, k >= 1.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn is_prime(p: u64) -> bool {
    matches!(prime_power(p), Some((_, 1)))
}

// ---- polynomial helpers over GF(p), coefficients low-degree first ----

fn poly_rem(mut r: Vec<u16>, g: &[u16], p: u64) -> Vec<u16> {
    // g is monic
    while r.len() >= g.len() {
        let lead = u64::from(*r.last().unwrap());
        if lead != 0 {
            let off = r.len() - g.len();
            for (i, &gc) in g.iter().enumerate() {
                let v = (u64::from(r[off + i]) + p * p - lead * u64::from(gc) % p) % p;
                r[off + i] = v as u16;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

fn poly_mul_mod(a: &[u16], b: &[u16], m: &[u16], p: u64) -> Vec<u16> {
    let mut prod = vec![0u16; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let v = (u64::from(prod[i + j]) + u64::from(x) * u64::from(y)) % p;
            prod[i + j] = v as u16;
        }
    }
    poly_rem(prod, m, p)
}

fn is_irreducible(m: &[u16], p: u64) -> bool {
    let k = m.len() - 1;
    let mut divisor = Vec::new();
    for d in 1..=k / 2 {
        divisor.clear();
        divisor.resize(d + 1, 0);
        divisor[d] = 1;
        loop {
            if poly_rem(m.to_vec(), &divisor, p).is_empty() {
                return false;
            }
            // advance the low d coefficients like a base-p counter
            let mut i = 0;
            while i < d {
                divisor[i] += 1;
                if u64::from(divisor[i]) < p {
                    break;
                }
                divisor[i] = 0;
                i += 1;
            }
            if i == d {
                break;
            }
        }
    }
    true
}

/// Least monic irreducible of degree k over GF(p), comparing coefficient
/// tuples (c_{k-1}, ..., c_0) lexicographically.
fn default_modulus(p: u64, k: u32) -> Vec<u16> {
    let k = k as usize;
    if k == 1 {
        return vec![0, 1]; // the polynomial x; unused for prime fields
    }
    let mut coeffs = vec![0u16; k]; // (c_{k-1}, ..., c_0)
    loop {
        let mut m: Vec<u16> = coeffs.iter().rev().copied().collect();
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            coeffs[i] += 1;
            if u64::from(coeffs[i]) < p {
                break;
            }
            coeffs[i] = 0;
            if i == 0 {
                unreachable!("an irreducible polynomial of every degree exists");
            }
        }
    }
}

/// Description of a field: characteristic, degree, and modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u64,
    k: u32,
    /// Monic, length k+1, low-degree first. For k = 1 this is ignored.
    modulus: Vec<u16>,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        Self::extension(p, 1)
    }

    /// p^k with the default (least) irreducible modulus.
    pub fn extension(p: u64, k: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NonPrimeP(p));
        }
        if k == 0 {
            return Err(Error::InvalidOrder(1));
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_ORDER);
        if q.is_none() {
            return Err(Error::ScaleLimit(format!(
                "field order {p}^{k} exceeds the table-backed maximum {MAX_ORDER}"
            )));
        }
        Ok(FieldSpec { p, k, modulus: default_modulus(p, k) })
    }

    /// p^k with an explicit monic modulus, coefficients given high-degree first.
    pub fn with_modulus(p: u64, k: u32, coeffs_high_first: &[u64]) -> Result<Self> {
        let mut spec = Self::extension(p, k)?;
        if coeffs_high_first.len() != k as usize + 1 {
            return Err(Error::DegreeMismatch {
                expected: k,
                got: coeffs_high_first.len().saturating_sub(1) as u32,
            });
        }
        let reduced: Vec<u16> = coeffs_high_first.iter().rev().map(|&c| (c % p) as u16).collect();
        if *reduced.last().unwrap() != 1 {
            return Err(Error::DegreeMismatch { expected: k, got: k - 1 });
        }
        if k > 1 && !is_irreducible(&reduced, p) {
            return Err(Error::ReducibleModulus { p });
        }
        spec.modulus = reduced;
        Ok(spec)
    }

    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or(Error::InvalidOrder(q))?;
        Self::extension(p, k)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    /// Modulus coefficients, low-degree first, length k+1.
    pub fn modulus(&self) -> &[u16] {
        &self.modulus
    }
}

impl fmt::Display for FieldSpec {
    /// `"p"` for prime fields, `"p^k/c_k,...,c_0"` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            return write!(f, "{}", self.p);
        }
        let coeffs: Vec<String> = self.modulus.iter().rev().map(|c| c.to_string()).collect();
        write!(f, "{}^{}/{}", self.p, self.k, coeffs.join(","))
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("field spec {s:?}: {what}"));
        match s.split_once('/') {
            None => {
                if let Some((p, k)) = s.split_once('^') {
                    let p = p.parse().map_err(|_| bad("p is not a number"))?;
                    let k = k.parse().map_err(|_| bad("k is not a number"))?;
                    Self::extension(p, k)
                } else {
                    let p = s.parse().map_err(|_| bad("p is not a number"))?;
                    Self::prime(p)
                }
            }
            Some((head, tail)) => {
                let (p, k) = head.split_once('^').ok_or_else(|| bad("expected p^k before '/'"))?;
                let p = p.parse().map_err(|_| bad("p is not a number"))?;
                let k = k.parse().map_err(|_| bad("k is not a number"))?;
                let coeffs = tail
                    .split(',')
                    .map(|c| c.trim().parse::<u64>().map_err(|_| bad("bad coefficient")))
                    .collect::<Result<Vec<_>>>()?;
                Self::with_modulus(p, k, &coeffs)
            }
        }
    }
}

/// An element of a [`Field`], stored as its dense index.
///
/// Elements only make sense relative to the field that produced them;
/// arithmetic on elements from a different field of another order panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(pub(crate) u16);

impl FieldElement {
    pub fn index(self) -> usize {
        usize::from(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// GF(q) with precomputed q*q addition and multiplication tables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Field {
    spec: FieldSpec,
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>, // inv[0] is unused
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let p = spec.p;
        let k = spec.k as usize;
        let q = spec.order() as usize;
        let decode = |e: usize| -> Vec<u16> {
            let mut c = vec![0u16; k];
            let mut e = e as u64;
            for d in c.iter_mut() {
                *d = (e % p) as u16;
                e /= p;
            }
            c
        };
        let encode = |c: &[u16]| -> u16 {
            let mut e = 0u64;
            for &d in c.iter().rev() {
                e = e * p + u64::from(d);
            }
            e as u16
        };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = decode(a);
            for b in 0..q {
                let db = decode(b);
                let sum: Vec<u16> =
                    da.iter().zip(&db).map(|(&x, &y)| ((u64::from(x) + u64::from(y)) % p) as u16).collect();
                add[a * q + b] = encode(&sum);
                let mut prod = poly_mul_mod(&da, &db, &spec.modulus, p);
                prod.resize(k, 0);
                mul[a * q + b] = encode(&prod);
            }
        }
        let neg = (0..q)
            .map(|a| (0..q).map(|b| b as u16).find(|&b| add[a * q + usize::from(b)] == 0).unwrap())
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).map(|b| b as u16).find(|&b| mul[a * q + usize::from(b)] == 1).unwrap()
                }
            })
            .collect();
        Ok(Field { spec, q, add, mul, neg, inv })
    }

    pub fn of_order(q: u64) -> Result<Field> {
        Field::new(FieldSpec::of_order(q)?)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.spec.p
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element with the given index, if it is in range.
    pub fn element(&self, index: usize) -> Option<FieldElement> {
        (index < self.q).then_some(FieldElement(index as u16))
    }

    /// All q elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.q as u16).map(FieldElement)
    }

    #[inline]
    fn check(&self, a: FieldElement) -> usize {
        let i = usize::from(a.0);
        assert!(i < self.q, "element {i} does not belong to GF({})", self.q);
        i
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[self.check(a) * self.q + self.check(b)])
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[self.check(a) * self.q + self.check(b)])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[self.check(a)])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(FieldElement(self.inv[self.check(a)]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        let mut acc = self.one();
        let mut sq = a;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            e >>= 1;
        }
        acc
    }

    /// Exhaustively verify the field axioms on the tables. Quadratic and cubic
    /// in q; intended for the small orders this crate enumerates over. Returns
    /// a description of the first violated axiom.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        let q = self.q;
        let add = |a: usize, b: usize| usize::from(self.add[a * q + b]);
        let mul = |a: usize, b: usize| usize::from(self.mul[a * q + b]);
        for a in 0..q {
            if add(a, 0) != a {
                return Err(format!("{a} + 0 != {a}"));
            }
            if mul(a, 1) != a {
                return Err(format!("{a} * 1 != {a}"));
            }
            if mul(a, 0) != 0 {
                return Err(format!("{a} * 0 != 0"));
            }
            for b in 0..q {
                if add(a, b) != add(b, a) {
                    return Err(format!("addition not commutative at ({a},{b})"));
                }
                if mul(a, b) != mul(b, a) {
                    return Err(format!("multiplication not commutative at ({a},{b})"));
                }
            }
        }
        // each row of either table must be a permutation (additive and, for
        // nonzero rows, multiplicative group structure); this catches any
        // single corrupted entry
        let mut seen = vec![false; q];
        for a in 0..q {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..q {
                let v = add(a, b);
                if seen[v] {
                    return Err(format!("addition row {a} is not a permutation"));
                }
                seen[v] = true;
            }
        }
        for a in 1..q {
            seen.iter_mut().for_each(|s| *s = false);
            for b in 0..q {
                let v = mul(a, b);
                if b > 0 && seen[v] {
                    return Err(format!("multiplication row {a} is not a permutation"));
                }
                seen[v] = true;
            }
        }
        for a in 0..q {
            for b in 0..q {
                for c in 0..q {
                    if add(add(a, b), c) != add(a, add(b, c)) {
                        return Err(format!("addition not associative at ({a},{b},{c})"));
                    }
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(format!("multiplication not associative at ({a},{b},{c})"));
                    }
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                        return Err(format!("distributivity fails at ({a},{b},{c})"));
                    }
                }
            }
        }
        for a in 0..q {
            if add(a, usize::from(self.neg[a])) != 0 {
                return Err(format!("negation table wrong at {a}"));
            }
            if a > 0 && mul(a, usize::from(self.inv[a])) != 1 {
                return Err(format!("inverse table wrong at {a}"));
            }
        }
        Ok(())
    }

    /// Fault-injection hook for the verification suites' mutation test.
    #[cfg(test)]
    pub(crate) fn corrupt_mul_entry(&mut self, a: usize, b: usize, value: u16) {
        self.mul[a * self.q + b] = value;
    }
}
