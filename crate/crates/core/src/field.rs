//! Arithmetic in GF(q) for prime powers q up to 2^20.
//!
//! Elements are identified by their canonical index `Σ coeffs[i]·p^i`, where
//! `coeffs` are the residues of the polynomial representative (low-to-high)
//! modulo the field's irreducible modulus. Index 0 is zero and index 1 is one,
//! and the index order is the total order used for vertex ids downstream.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order accepted by [`Field::new`].
pub const MAX_ORDER: u64 = 1 << 20;

/// Precomputed moduli: the lexicographically smallest monic irreducible
/// polynomial (coefficients low-to-high, compared from the constant term) for
/// each listed order. Kept in sync with [`Field::search_modulus`] by a test.
const MODULUS_TABLE: &[(u32, &[u32])] = &[
    (4, &[1, 1, 1]),
    (8, &[1, 0, 1, 1]),
    (9, &[1, 0, 1]),
    (16, &[1, 0, 0, 1, 1]),
    (25, &[1, 1, 1]),
    (27, &[1, 0, 2, 1]),
    (32, &[1, 0, 0, 1, 0, 1]),
    (49, &[1, 0, 1]),
    (64, &[1, 0, 0, 0, 0, 1, 1]),
    (81, &[1, 0, 1, 1, 1]),
    (121, &[1, 0, 1]),
    (125, &[1, 0, 1, 1]),
    (128, &[1, 0, 0, 0, 0, 0, 1, 1]),
];

/// Orders up to this size get a dense addition table.
const ADD_TABLE_LIMIT: u32 = 256;

/// An element of some GF(q), stored as its canonical index.
///
/// Elements do not carry their field; all arithmetic goes through [`Field`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// Wraps a raw index without checking it against any field.
    pub const fn from_index_unchecked(index: u32) -> Self {
        FieldElement(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct Inner {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    /// exp[k] = g^k for a primitive element g, k in 0..q-1.
    exp: Vec<u32>,
    /// log[x] for x != 0; log[0] is unused.
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
}

/// The finite field GF(p^n). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field {
    inner: Arc<Inner>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("q", &self.inner.q)
            .field("p", &self.inner.p)
            .field("n", &self.inner.n)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.inner.q == other.inner.q && self.inner.modulus == other.inner.modulus
    }
}

impl Eq for Field {}

/// Splits `q` as `p^n` with `p` prime, if possible.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        // q itself is prime
        p = q;
    }
    let mut rest = q;
    let mut n = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        n += 1;
    }
    (rest == 1).then_some((p as u32, n))
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            out.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p), trimmed.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dm;
            for (i, &mc) in m.iter().enumerate() {
                let sub = (lead as u64 * mc as u64 % p as u64) as u32;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    if n <= 1 {
        return n == 1;
    }
    // trial division by every monic polynomial of degree 1..=n/2
    for d in 1..=n / 2 {
        let count = (p as u64).pow(d as u32);
        let mut g = vec![0u32; d + 1];
        g[d] = 1;
        for k in 0..count {
            let mut k = k;
            for c in g.iter_mut().take(d) {
                *c = (k % p as u64) as u32;
                k /= p as u64;
            }
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl Field {
    /// Builds GF(q). The modulus comes from the built-in table when listed,
    /// otherwise from [`Field::search_modulus`].
    pub fn new(q: u64) -> Result<Field> {
        let (p, n) = prime_power(q).ok_or(Error::NotAPrimePower(q))?;
        if q > MAX_ORDER {
            return Err(Error::FieldTooLarge(q));
        }
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            MODULUS_TABLE
                .iter()
                .find(|(order, _)| *order as u64 == q)
                .map(|(_, m)| m.to_vec())
                .unwrap_or_else(|| Self::search_modulus(p, n))
        };
        Ok(Self::with_modulus(p, n, modulus))
    }

    /// Lexicographically smallest monic irreducible of degree `n` over GF(p),
    /// comparing coefficient sequences low-to-high from the constant term.
    pub fn search_modulus(p: u32, n: u32) -> Vec<u32> {
        let n = n as usize;
        let count = (p as u64).pow(n as u32);
        let mut f = vec![0u32; n + 1];
        f[n] = 1;
        for k in 0..count {
            // c0 is the most significant digit of k
            let mut k = k;
            for i in (0..n).rev() {
                f[i] = (k % p as u64) as u32;
                k /= p as u64;
            }
            if is_irreducible(&f, p) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn with_modulus(p: u32, n: u32, modulus: Vec<u32>) -> Field {
        debug_assert!(is_irreducible(&modulus, p));
        let q = p.pow(n);
        // table-free view used to derive the tables
        let proto = Field {
            inner: Arc::new(Inner {
                p,
                n,
                q,
                modulus: modulus.clone(),
                exp: Vec::new(),
                log: Vec::new(),
                add_table: None,
            }),
        };
        let g = proto.find_primitive();
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![0u32; q as usize];
        let mut x = FieldElement::ONE;
        for k in 0..q - 1 {
            exp.push(x.0);
            log[x.0 as usize] = k;
            x = proto.mul_poly(x, g);
        }
        let add_table = (q <= ADD_TABLE_LIMIT).then(|| {
            let mut table = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    table[(a * q + b) as usize] =
                        proto.add_digits(FieldElement(a), FieldElement(b)).0;
                }
            }
            table
        });
        Field {
            inner: Arc::new(Inner {
                p,
                n,
                q,
                modulus,
                exp,
                log,
                add_table,
            }),
        }
    }

    fn find_primitive(&self) -> FieldElement {
        let q = self.inner.q as u64;
        if q == 2 {
            return FieldElement::ONE;
        }
        let factors = prime_factors(q - 1);
        (2..self.inner.q)
            .map(FieldElement)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&r| self.pow_poly(g, (q - 1) / r) != FieldElement::ONE)
            })
            .expect("multiplicative group is cyclic")
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn n(&self) -> u32 {
        self.inner.n
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Modulus coefficients, low-to-high (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    /// All elements in ascending index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.inner.q).map(FieldElement)
    }

    pub fn element(&self, index: u32) -> Result<FieldElement> {
        if index < self.inner.q {
            Ok(FieldElement(index))
        } else {
            Err(Error::NotInField {
                index,
                q: self.inner.q,
            })
        }
    }

    pub fn contains(&self, x: FieldElement) -> bool {
        x.0 < self.inner.q
    }

    pub fn coeffs(&self, x: FieldElement) -> Vec<u32> {
        let p = self.inner.p;
        let mut idx = x.0;
        (0..self.inner.n)
            .map(|_| {
                let c = idx % p;
                idx /= p;
                c
            })
            .collect()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        let p = self.inner.p;
        let reduced = poly_rem(
            &coeffs.iter().map(|c| c % p).collect::<Vec<_>>(),
            &self.inner.modulus,
            p,
        );
        FieldElement(reduced.iter().rev().fold(0, |acc, &c| acc * p + c))
    }

    /// The element `k·1`, i.e. the integer `k` reduced into the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        FieldElement(k.rem_euclid(self.inner.p as i64) as u32)
    }

    fn add_digits(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return FieldElement(x.0 ^ y.0);
        }
        let (mut a, mut b) = (x.0, y.0);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.inner.n {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn add(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        match &self.inner.add_table {
            Some(t) => FieldElement(t[(x.0 * self.inner.q + y.0) as usize]),
            None => self.add_digits(x, y),
        }
    }

    pub fn neg(&self, x: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if p == 2 {
            return x;
        }
        let mut a = x.0;
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.inner.n {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        FieldElement(out)
    }

    pub fn sub(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        self.add(x, self.neg(y))
    }

    /// `x + x`; always zero in characteristic 2.
    pub fn double(&self, x: FieldElement) -> FieldElement {
        self.add(x, x)
    }

    pub fn mul(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        if x.0 == 0 || y.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let k = (inner.log[x.0 as usize] as u64 + inner.log[y.0 as usize] as u64)
            % (inner.q as u64 - 1);
        FieldElement(inner.exp[k as usize])
    }

    pub fn square(&self, x: FieldElement) -> FieldElement {
        self.mul(x, x)
    }

    pub fn inv(&self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let inner = &*self.inner;
        let order = inner.q - 1;
        let k = (order - inner.log[x.0 as usize]) % order;
        Ok(FieldElement(inner.exp[k as usize]))
    }

    pub fn div(&self, x: FieldElement, y: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, self.inv(y)?))
    }

    pub fn pow(&self, x: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if x.0 == 0 {
            return FieldElement::ZERO;
        }
        let inner = &*self.inner;
        let k = inner.log[x.0 as usize] as u64 * (e % (inner.q as u64 - 1)) % (inner.q as u64 - 1);
        FieldElement(inner.exp[k as usize])
    }

    /// Schoolbook product reduced by the modulus; independent of the log
    /// tables and used to build them.
    pub fn mul_poly(&self, x: FieldElement, y: FieldElement) -> FieldElement {
        let p = self.inner.p as u64;
        let a = self.coeffs(x);
        let b = self.coeffs(y);
        let mut prod = vec![0u32; a.len() + b.len() - 1];
        for (i, &ai) in a.iter().enumerate() {
            for (j, &bj) in b.iter().enumerate() {
                prod[i + j] = ((prod[i + j] as u64 + ai as u64 * bj as u64) % p) as u32;
            }
        }
        if self.inner.n == 1 {
            return FieldElement(prod[0]);
        }
        self.from_coeffs(&prod)
    }

    fn pow_poly(&self, x: FieldElement, mut e: u64) -> FieldElement {
        let mut base = x;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_poly(acc, base);
            }
            base = self.mul_poly(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse by extended Euclid on polynomial representatives (Fermat for
    /// prime fields). Independent of the log tables.
    pub fn inv_euclid(&self, x: FieldElement) -> Result<FieldElement> {
        if x.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.inner.n == 1 {
            return Ok(self.pow_poly(x, self.inner.q as u64 - 2));
        }
        let p = self.inner.p;
        let trim = |v: &mut Vec<u32>| {
            while v.len() > 1 && *v.last().unwrap() == 0 {
                v.pop();
            }
        };
        let inv_mod_p = |c: u32| -> u32 {
            (1..p)
                .find(|&d| (c as u64 * d as u64) % p as u64 == 1)
                .unwrap()
        };
        // invariants: s*x ≡ r0, t*x ≡ r1 (mod modulus)
        let mut r0 = self.inner.modulus.clone();
        let mut r1 = self.coeffs(x);
        trim(&mut r1);
        let mut s0: Vec<u32> = vec![0];
        let mut s1: Vec<u32> = vec![1];
        while !(r1.len() == 1 && r1[0] == 0) {
            // polynomial division r0 = quot*r1 + rem
            let mut rem = r0.clone();
            let d1 = r1.len() - 1;
            let lead_inv = inv_mod_p(r1[d1]);
            let mut quot = vec![0u32; rem.len().saturating_sub(d1).max(1)];
            while rem.len() > d1 && !(rem.len() == 1 && rem[0] == 0) {
                let shift = rem.len() - 1 - d1;
                let c = (*rem.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
                quot[shift] = c;
                for (i, &rc) in r1.iter().enumerate() {
                    let sub = (c as u64 * rc as u64 % p as u64) as u32;
                    rem[shift + i] = (rem[shift + i] + p - sub) % p;
                }
                rem.pop();
                if rem.is_empty() {
                    rem.push(0);
                }
            }
            trim(&mut rem);
            // s2 = s0 - quot*s1
            let mut s2 = vec![0u32; (quot.len() + s1.len()).max(s0.len())];
            for (i, &c) in s0.iter().enumerate() {
                s2[i] = c;
            }
            for (i, &qc) in quot.iter().enumerate() {
                for (j, &sc) in s1.iter().enumerate() {
                    let sub = (qc as u64 * sc as u64 % p as u64) as u32;
                    s2[i + j] = (s2[i + j] + p - sub) % p;
                }
            }
            trim(&mut s2);
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant c; s0*x ≡ c
        let c_inv = inv_mod_p(r0[0]);
        let scaled: Vec<u32> = s0
            .iter()
            .map(|&c| (c as u64 * c_inv as u64 % p as u64) as u32)
            .collect();
        Ok(self.from_coeffs(&scaled))
    }
}
