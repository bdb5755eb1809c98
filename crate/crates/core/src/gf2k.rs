//! Arithmetic in the finite fields GF(2^k), 1 ≤ k ≤ 8.
//!
//! Elements are k-bit values holding the coefficients of a polynomial over
//! GF(2) modulo a fixed irreducible polynomial per degree. Multiplication and
//! inversion go through log/antilog tables built once per field, so all
//! arithmetic is branch-light table lookups. Addition is XOR.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A field element, stored in the low k bits.
pub type Fel = u16;

/// Default modulus per extension degree, as a bitmask including the x^k term.
/// Index 0 is unused. Every entry is irreducible over GF(2); `GfField::new`
/// re-checks this at construction time.
pub const DEFAULT_POLYS: [u16; 9] = [
    0,
    0b11,        // x + 1
    0b111,       // x^2 + x + 1
    0b1011,      // x^3 + x + 1
    0b10011,     // x^4 + x + 1
    0b100101,    // x^5 + x^2 + 1
    0b1000011,   // x^6 + x + 1
    0b10000011,  // x^7 + x + 1
    0b100011011, // x^8 + x^4 + x^3 + x + 1
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    DegreeOutOfRange(usize),
    WrongDegree { degree: usize, poly: u32 },
    ReduciblePoly(u32),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::DegreeOutOfRange(k) => write!(f, "extension degree {k} not in 1..=8"),
            FieldError::WrongDegree { degree, poly } => {
                write!(f, "polynomial {poly:#b} does not have degree {degree}")
            }
            FieldError::ReduciblePoly(p) => write!(f, "polynomial {p:#b} is reducible over GF(2)"),
            FieldError::DivisionByZero => write!(f, "division by zero field element"),
        }
    }
}

/// Carry-less product of two GF(2)[x] polynomials given as bitmasks.
fn clmul(a: u32, b: u32) -> u32 {
    let mut acc = 0u32;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 != 0 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

fn poly_degree(p: u32) -> i32 {
    31 - p.leading_zeros() as i32
}

/// Remainder of polynomial division over GF(2).
fn poly_mod(mut a: u32, m: u32) -> u32 {
    let dm = poly_degree(m);
    while poly_degree(a) >= dm && a != 0 {
        a ^= m << (poly_degree(a) - dm);
    }
    a
}

/// Irreducibility over GF(2) by trial division; fine for degree ≤ 8.
pub fn is_irreducible(p: u32) -> bool {
    let d = poly_degree(p);
    if d < 1 {
        return false;
    }
    if d == 1 {
        return true;
    }
    // Any factorization of p has an irreducible factor of degree ≤ d/2.
    for q in 2u32..(1u32 << (d / 2 + 1)) {
        if poly_degree(q as u32) > d / 2 {
            break;
        }
        if poly_mod(p, q) == 0 {
            return false;
        }
    }
    true
}

/// The field GF(2^k) with fixed modulus and log/antilog tables.
///
/// Immutable after construction; share freely across threads.
#[derive(Debug, Clone)]
pub struct GfField {
    k: usize,
    poly: u16,
    order: usize, // 2^k - 1, the order of the multiplicative group
    log: Vec<u16>,
    antilog: Vec<Fel>,
}

impl GfField {
    /// Field with the default modulus for degree `k`.
    pub fn new(k: usize) -> Result<GfField, FieldError> {
        if k == 0 || k > 8 {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        GfField::with_poly(k, DEFAULT_POLYS[k] as u32)
    }

    /// Field with an explicit modulus (degree-k bitmask including x^k).
    pub fn with_poly(k: usize, poly: u32) -> Result<GfField, FieldError> {
        if k == 0 || k > 8 {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        if poly_degree(poly) != k as i32 {
            return Err(FieldError::WrongDegree { degree: k, poly });
        }
        if !is_irreducible(poly) {
            return Err(FieldError::ReduciblePoly(poly));
        }
        let q = 1usize << k;
        let order = q - 1;
        // Find a generator of the multiplicative group, then tabulate.
        let mul = |a: Fel, b: Fel| poly_mod(clmul(a as u32, b as u32), poly) as Fel;
        let mut gen = 0;
        'search: for cand in 2..q as Fel {
            let c = if k == 1 { 1 } else { cand };
            let mut x: Fel = 1;
            for step in 1..=order {
                x = mul(x, c);
                if x == 1 {
                    if step == order {
                        gen = c;
                        break 'search;
                    }
                    continue 'search;
                }
            }
        }
        if k == 1 {
            gen = 1;
        }
        debug_assert!(gen != 0);
        let mut log = vec![0u16; q];
        let mut antilog = vec![0 as Fel; order.max(1)];
        let mut x: Fel = 1;
        for e in 0..order {
            antilog[e] = x;
            log[x as usize] = e as u16;
            x = mul(x, gen);
        }
        Ok(GfField { k, poly: poly as u16, order, log, antilog })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        1 << self.k
    }

    pub fn modulus(&self) -> u16 {
        self.poly
    }

    /// All elements, 0 first then the rest in numeric order.
    pub fn elements(&self) -> impl Iterator<Item = Fel> {
        0..(1u16 << self.k)
    }

    /// A fixed generator of the multiplicative group (1 for GF(2)).
    pub fn generator(&self) -> Fel {
        if self.order == 0 {
            1
        } else {
            self.antilog[if self.order > 1 { 1 } else { 0 }]
        }
    }

    /// A basis of GF(2^k) over GF(2): the powers of x.
    pub fn basis(&self) -> impl Iterator<Item = Fel> {
        (0..self.k).map(|i| 1 << i)
    }

    #[inline]
    pub fn add(&self, a: Fel, b: Fel) -> Fel {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Fel, b: Fel) -> Fel {
        if a == 0 || b == 0 {
            0
        } else {
            let e = self.log[a as usize] as usize + self.log[b as usize] as usize;
            self.antilog[e % self.order.max(1)]
        }
    }

    pub fn inv(&self, a: Fel) -> Result<Fel, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if self.order <= 1 {
            return Ok(1);
        }
        let e = (self.order - self.log[a as usize] as usize) % self.order;
        Ok(self.antilog[e])
    }

    /// a^n for signed n (negative exponents invert).
    pub fn pow(&self, a: Fel, n: i32) -> Result<Fel, FieldError> {
        if n == 0 {
            return Ok(1);
        }
        let base = if n < 0 { self.inv(a)? } else { a };
        let mut acc: Fel = 1;
        for _ in 0..n.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        Ok(acc)
    }
}
