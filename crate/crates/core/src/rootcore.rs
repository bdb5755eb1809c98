//! Root systems and Weyl groups for all finite crystallographic types.
//!
//! Roots are stored as integer coefficient vectors over the simple roots, so
//! every Weyl element is an integer matrix and 1 − τ^i w has an exact rank
//! over ℚ (computed fraction-free). Bourbaki Euclidean coordinates are kept
//! alongside, scaled to integers, and are used to generate the Cartan data
//! and to translate the classical table roots (2e_i, e_i ± e_j, ...) into
//! lattice coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{IntMat, MAX_RANK};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        };
        write!(f, "{c}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootError {
    InvalidType { series: Series, rank: usize },
    NotARoot,
    NotAnInvolution,
    DimMismatch,
    NoSuchAutomorphism,
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::InvalidType { series, rank } => {
                write!(f, "no simple root system of type {series}{rank}")
            }
            RootError::NotARoot => write!(f, "vector is not a root of this system"),
            RootError::NotAnInvolution => write!(f, "Weyl element is not an involution"),
            RootError::DimMismatch => write!(f, "elements belong to different root systems"),
            RootError::NoSuchAutomorphism => {
                write!(f, "requested diagram automorphism does not exist for this type")
            }
        }
    }
}

/// A root (or any lattice vector) in simple-root coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(pub [i16; MAX_RANK]);

impl Root {
    pub fn zero() -> Root {
        Root([0; MAX_RANK])
    }

    pub fn from_slice(c: &[i64]) -> Root {
        let mut r = Root::zero();
        for (i, &v) in c.iter().enumerate() {
            r.0[i] = v as i16;
        }
        r
    }

    pub fn simple(i: usize) -> Root {
        let mut r = Root::zero();
        r.0[i] = 1;
        r
    }

    pub fn height(&self, rank: usize) -> i32 {
        self.0[..rank].iter().map(|&c| c as i32).sum()
    }

    pub fn is_positive(&self, rank: usize) -> bool {
        self.0[..rank].iter().all(|&c| c >= 0) && self.0[..rank].iter().any(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        let mut r = *self;
        for c in r.0.iter_mut() {
            *c = -*c;
        }
        r
    }

    pub fn coords(&self, rank: usize) -> &[i16] {
        &self.0[..rank]
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// An element of the Weyl group as an integer matrix on simple-root
/// coordinates (columns are the images of the simple roots).
///
/// Equality and hashing ignore `cached_length`; it is only a memo.
#[derive(Clone, Copy, Debug)]
pub struct WeylElement {
    pub mat: IntMat,
    pub cached_length: Option<u32>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl core::hash::Hash for WeylElement {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        WeylElement { mat: IntMat::identity(rank), cached_length: Some(0) }
    }

    pub fn rank(&self) -> usize {
        self.mat.n
    }

    pub fn apply(&self, r: &Root) -> Root {
        let n = self.mat.n;
        let mut out = Root::zero();
        for i in 0..n {
            let mut acc = 0i64;
            for j in 0..n {
                acc += self.mat.get(i, j) * r.0[j] as i64;
            }
            out.0[i] = acc as i16;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.mat.is_identity()
    }

    pub fn inverse(&self, rs: &RootSystem) -> WeylElement {
        // Finite order: invert by walking the cyclic group. Orders in Weyl
        // groups are at most 30 (Coxeter number of E8), so this is cheap.
        let mut acc = *self;
        let mut prev = WeylElement::identity(self.mat.n);
        while !acc.is_identity() {
            prev = acc;
            acc = compose(&acc, self).unwrap();
        }
        let mut w = prev;
        w.cached_length = self.cached_length;
        let _ = rs;
        w
    }
}

/// Composition u∘v (first v, then u). Errors on rank mismatch.
pub fn compose(u: &WeylElement, v: &WeylElement) -> Result<WeylElement, RootError> {
    if u.mat.n != v.mat.n {
        return Err(RootError::DimMismatch);
    }
    Ok(WeylElement { mat: u.mat.mul(&v.mat), cached_length: None })
}

/// A diagram automorphism, stored as the permutation of simple-root indices
/// together with its induced lattice matrix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DiagramAutomorphism {
    pub perm: [u8; MAX_RANK],
    pub order: u8,
    pub mat: IntMat,
}

impl DiagramAutomorphism {
    pub fn identity(rank: usize) -> DiagramAutomorphism {
        let mut perm = [0u8; MAX_RANK];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        DiagramAutomorphism { perm, order: 1, mat: IntMat::identity(rank) }
    }

    fn from_perm(rank: usize, perm: [u8; MAX_RANK], order: u8) -> DiagramAutomorphism {
        let mut mat = IntMat::zero(rank);
        for j in 0..rank {
            mat.set(perm[j] as usize, j, 1);
        }
        DiagramAutomorphism { perm, order, mat }
    }

    /// The standard order-2 graph automorphism: reversal for A_n (n ≥ 2),
    /// the last-two-node swap for D_n, the (1 6)(3 5) flip for E6.
    pub fn standard(rs: &RootSystem) -> Result<DiagramAutomorphism, RootError> {
        let n = rs.rank;
        let mut perm = [0u8; MAX_RANK];
        for (i, p) in perm.iter_mut().enumerate() {
            *p = i as u8;
        }
        match (rs.series, n) {
            (Series::A, n) if n >= 2 => {
                for i in 0..n {
                    perm[i] = (n - 1 - i) as u8;
                }
            }
            (Series::D, n) if n >= 2 => {
                perm.swap(n - 1, n - 2);
            }
            (Series::E, 6) => {
                perm = [5, 1, 4, 3, 2, 0, 6, 7];
            }
            _ => return Err(RootError::NoSuchAutomorphism),
        }
        Ok(DiagramAutomorphism::from_perm(n, perm, 2))
    }

    /// The triality automorphism of D4: fixes node 2, cycles 1 → 3 → 4 → 1.
    pub fn triality(rs: &RootSystem) -> Result<DiagramAutomorphism, RootError> {
        if rs.series != Series::D || rs.rank != 4 {
            return Err(RootError::NoSuchAutomorphism);
        }
        let perm = [2u8, 1, 3, 0, 4, 5, 6, 7];
        Ok(DiagramAutomorphism::from_perm(4, perm, 3))
    }

    pub fn power_matrix(&self, i: u8) -> IntMat {
        let mut acc = IntMat::identity(self.mat.n);
        for _ in 0..(i % self.order) {
            acc = self.mat.mul(&acc);
        }
        acc
    }
}

/// A Weyl element composed with a power of a diagram automorphism, the map
/// τ^i·w on the root lattice.
#[derive(Clone, Copy, Debug)]
pub struct TwistedElement {
    pub tau: DiagramAutomorphism,
    pub twist_power: u8,
    pub w: WeylElement,
}

impl TwistedElement {
    pub fn untwisted(w: WeylElement) -> TwistedElement {
        TwistedElement { tau: DiagramAutomorphism::identity(w.mat.n), twist_power: 0, w }
    }

    pub fn new(tau: DiagramAutomorphism, twist_power: u8, w: WeylElement) -> TwistedElement {
        TwistedElement { tau, twist_power, w }
    }

    /// The matrix of τ^i·w on simple-root coordinates.
    pub fn matrix(&self) -> IntMat {
        self.tau.power_matrix(self.twist_power).mul(&self.w.mat)
    }
}

/// Immutable root datum for one simple (or small reducible D) type.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub series: Series,
    pub rank: usize,
    pub cartan: IntMat,
    pub symmetrizer: Vec<i64>,
    gram: IntMat,
    positive_roots: Vec<Root>,
    /// Euclidean coordinates (times `euclid_scale`) of each simple root.
    euclid_simple: Vec<Vec<i64>>,
    pub euclid_scale: i64,
    pub ambient_dim: usize,
    /// (root, euclidean vector) pairs for every root, positives first.
    euclid_table: Vec<(Root, Vec<i64>)>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl RootSystem {
    /// Builds the root system of the given simple type. C requires n ≥ 2,
    /// D requires n ≥ 4, B requires n ≥ 2; E is 6..8, F is 4, G is 2.
    pub fn build(series: Series, rank: usize) -> Result<RootSystem, RootError> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if !ok || rank > MAX_RANK {
            return Err(RootError::InvalidType { series, rank });
        }
        Ok(Self::build_from_euclid(series, rank))
    }

    /// D-series datum for n ∈ {2, 3} (reducible A1×A1, resp. relabelled A3).
    /// Not a simple type, but the orthogonal groups O(4) and O(6) need it.
    pub(crate) fn build_d_relaxed(rank: usize) -> RootSystem {
        assert!((2..=MAX_RANK).contains(&rank));
        Self::build_from_euclid(Series::D, rank)
    }

    fn build_from_euclid(series: Series, rank: usize) -> RootSystem {
        let (euclid_simple, euclid_scale, ambient_dim) = euclid_data(series, rank);
        // Cartan matrix from the Euclidean data: a_ij = 2(αi,αj)/(αi,αi).
        let mut cartan = IntMat::zero(rank);
        for i in 0..rank {
            let sq = dot(&euclid_simple[i], &euclid_simple[i]);
            for j in 0..rank {
                let num = 2 * dot(&euclid_simple[i], &euclid_simple[j]);
                debug_assert_eq!(num % sq, 0);
                cartan.set(i, j, num / sq);
            }
        }
        // Symmetrizer d_i ∝ (αi,αi), normalized to relatively prime integers.
        let sqs: Vec<i64> = (0..rank).map(|i| dot(&euclid_simple[i], &euclid_simple[i])).collect();
        let g = sqs.iter().fold(0, |acc, &v| gcd(acc, v));
        let symmetrizer: Vec<i64> = sqs.iter().map(|&v| v / g).collect();
        let mut gram = IntMat::zero(rank);
        for i in 0..rank {
            for j in 0..rank {
                gram.set(i, j, symmetrizer[i] * cartan.get(i, j));
            }
        }

        // Generate all roots as the closure of the simple roots under the
        // simple reflections s_i(β) = β − ⟨β, αi∨⟩ αi.
        let mut all: Vec<Root> = (0..rank).map(Root::simple).collect();
        let mut frontier: Vec<Root> = all.clone();
        while let Some(r) = frontier.pop() {
            for i in 0..rank {
                let mut pairing = 0i64;
                for j in 0..rank {
                    pairing += cartan.get(i, j) * r.0[j] as i64;
                }
                let mut img = r;
                img.0[i] -= pairing as i16;
                if !all.contains(&img) {
                    all.push(img);
                    frontier.push(img);
                }
            }
        }
        let mut positive_roots: Vec<Root> =
            all.iter().copied().filter(|r| r.is_positive(rank)).collect();
        positive_roots.sort_by_key(|r| (r.height(rank), r.0));

        // Euclidean form of every root, for table translation and display.
        let mut euclid_table = Vec::with_capacity(all.len());
        for r in positive_roots.iter().map(|r| *r).chain(positive_roots.iter().map(|r| r.neg())) {
            let mut v = vec![0i64; ambient_dim];
            for j in 0..rank {
                for (t, &e) in euclid_simple[j].iter().enumerate() {
                    v[t] += r.0[j] as i64 * e;
                }
            }
            euclid_table.push((r, v));
        }

        RootSystem {
            series,
            rank,
            cartan,
            symmetrizer,
            gram,
            positive_roots,
            euclid_simple,
            euclid_scale,
            ambient_dim,
            euclid_table,
        }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(i)
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.positive_roots.contains(r) || self.positive_roots.contains(&r.neg())
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.positive_roots.contains(r)
    }

    /// Pairing (β, γ) in the symmetrized form (α_i, α_j) = d_i a_ij.
    pub fn inner(&self, b: &Root, c: &Root) -> i64 {
        let n = self.rank;
        let mut acc = 0i64;
        for i in 0..n {
            if b.0[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += b.0[i] as i64 * self.gram.get(i, j) * c.0[j] as i64;
            }
        }
        acc
    }

    pub fn is_orthogonal(&self, b: &Root, c: &Root) -> bool {
        self.inner(b, c) == 0
    }

    /// Scaled Euclidean (Bourbaki) coordinates of a root.
    pub fn root_to_euclid(&self, r: &Root) -> Option<&[i64]> {
        self.euclid_table.iter().find(|(root, _)| root == r).map(|(_, v)| v.as_slice())
    }

    /// Looks up the root with the given unscaled integer Euclidean vector.
    pub fn euclid_to_root(&self, v: &[i64]) -> Option<Root> {
        if v.len() != self.ambient_dim {
            return None;
        }
        let scaled: Vec<i64> = v.iter().map(|&x| x * self.euclid_scale).collect();
        self.euclid_table.iter().find(|(_, ev)| *ev == scaled).map(|(r, _)| *r)
    }

    /// The reflection s_β for a root β.
    pub fn reflection(&self, beta: &Root) -> Result<WeylElement, RootError> {
        if !self.is_root(beta) {
            return Err(RootError::NotARoot);
        }
        let n = self.rank;
        let bb = self.inner(beta, beta);
        let mut mat = IntMat::identity(n);
        for j in 0..n {
            let alpha_j = Root::simple(j);
            let num = 2 * self.inner(&alpha_j, beta);
            debug_assert_eq!(num % bb, 0);
            let coef = num / bb;
            for i in 0..n {
                mat.set(i, j, mat.get(i, j) - coef * beta.0[i] as i64);
            }
        }
        let mut w = WeylElement { mat, cached_length: None };
        w.cached_length = Some(self.length(&w) as u32);
        Ok(w)
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.reflection(&Root::simple(i)).unwrap()
    }

    /// ℓ(w) = #{β ∈ Φ⁺ : w(β) ∈ Φ⁻}.
    pub fn length(&self, w: &WeylElement) -> usize {
        if let Some(l) = w.cached_length {
            return l as usize;
        }
        self.positive_roots
            .iter()
            .filter(|r| {
                let img = w.apply(r);
                !img.is_positive(self.rank)
            })
            .count()
    }

    /// Product of reflections in the listed roots, left to right.
    pub fn reflection_product(&self, roots: &[Root]) -> Result<WeylElement, RootError> {
        let mut w = WeylElement::identity(self.rank);
        for r in roots {
            w = compose(&w, &self.reflection(r)?)?;
        }
        w.cached_length = Some(self.length(&WeylElement { cached_length: None, ..w }) as u32);
        Ok(w)
    }

    /// The longest element of the standard parabolic W_J. The full index set
    /// gives w0; the empty set gives the identity.
    pub fn longest_element(&self, j_set: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        'outer: loop {
            for &i in j_set {
                let img = w.apply(&Root::simple(i));
                if img.is_positive(self.rank) {
                    // ℓ(w s_i) = ℓ(w) + 1 while w(α_i) > 0
                    w = compose(&w, &self.simple_reflection(i)).unwrap();
                    continue 'outer;
                }
            }
            break;
        }
        w.cached_length = Some(self.length(&WeylElement { cached_length: None, ..w }) as u32);
        w
    }

    pub fn longest(&self) -> WeylElement {
        let all: Vec<usize> = (0..self.rank).collect();
        self.longest_element(&all)
    }

    /// Chevalley-Bruhat order, by the standard recursion: pick a simple s
    /// with ℓ(zs) < ℓ(z); then w ≤ z iff (ℓ(ws) < ℓ(w) ? ws ≤ zs : w ≤ zs).
    pub fn bruhat_leq(&self, w: &WeylElement, z: &WeylElement) -> Result<bool, RootError> {
        if w.mat.n != z.mat.n || w.mat.n != self.rank {
            return Err(RootError::DimMismatch);
        }
        let mut w = *w;
        let mut z = *z;
        loop {
            if w == z {
                return Ok(true);
            }
            let lz = self.length(&z);
            if lz == 0 {
                return Ok(false);
            }
            if self.length(&w) >= lz {
                return Ok(false);
            }
            // find a right descent of z
            let mut descent = None;
            for i in 0..self.rank {
                if !z.apply(&Root::simple(i)).is_positive(self.rank) {
                    descent = Some(i);
                    break;
                }
            }
            let s = self.simple_reflection(descent.expect("non-identity has a descent"));
            let zs = compose(&z, &s)?;
            let ws = compose(&w, &s)?;
            if self.length(&ws) < self.length(&w) {
                w = ws;
            }
            z = zs;
        }
    }

    /// Exact rank over ℚ of 1 − τ^i·w.
    pub fn rank_one_minus(&self, t: &TwistedElement) -> usize {
        IntMat::identity(self.rank).sub(&t.matrix()).rank()
    }

    /// ℓ(w) + rk(1 − τ^i w), the lower bound for the dimension of B.x when
    /// x ∈ Bτ^iwB, and the quantity compared against class dimensions.
    pub fn criterion_value(&self, t: &TwistedElement) -> usize {
        self.length(&t.w) + self.rank_one_minus(t)
    }

    /// For an involution w, a set of pairwise-orthogonal positive roots whose
    /// reflections compose to w. Longer roots are preferred first, so in C_n
    /// the result is the L(w) ∪ L(w)_⊥ decomposition (long roots, then short
    /// roots orthogonal to them).
    pub fn involution_orthogonal_decomposition(
        &self,
        w: &WeylElement,
    ) -> Result<Vec<Root>, RootError> {
        if w.mat.n != self.rank {
            return Err(RootError::DimMismatch);
        }
        if compose(w, w)?.mat != IntMat::identity(self.rank) {
            return Err(RootError::NotAnInvolution);
        }
        let target = IntMat::identity(self.rank)
            .sub(&TwistedElement::untwisted(*w).matrix())
            .rank();
        // candidates: positive roots sent to their negatives, long roots first
        let mut negated: Vec<Root> = self
            .positive_roots
            .iter()
            .copied()
            .filter(|r| w.apply(r) == r.neg())
            .collect();
        negated.sort_by_key(|r| {
            (-self.inner(r, r), r.height(self.rank), r.0)
        });
        let mut chosen: Vec<Root> = Vec::new();
        if self.search_orthogonal(&negated, 0, target, &mut chosen) {
            debug_assert_eq!(self.reflection_product(&chosen).unwrap().mat, w.mat);
            Ok(chosen)
        } else {
            // cannot happen for genuine Weyl involutions
            Err(RootError::NotAnInvolution)
        }
    }

    fn search_orthogonal(
        &self,
        cands: &[Root],
        from: usize,
        target: usize,
        chosen: &mut Vec<Root>,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        for idx in from..cands.len() {
            let c = cands[idx];
            if chosen.iter().all(|p| self.is_orthogonal(p, &c)) {
                chosen.push(c);
                if self.search_orthogonal(cands, idx + 1, target, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    /// Parses a root given either in lattice coordinates (m1,...,mn) or, for
    /// classical types, in unscaled Euclidean coordinates.
    pub fn root_from_coords(&self, c: &[i64]) -> Result<Root, RootError> {
        if c.len() == self.rank {
            let r = Root::from_slice(c);
            if self.is_root(&r) {
                return Ok(r);
            }
        }
        Err(RootError::NotARoot)
    }
}

/// Scaled Bourbaki simple-root coordinates: (vectors, scale, ambient dim).
fn euclid_data(series: Series, rank: usize) -> (Vec<Vec<i64>>, i64, usize) {
    let n = rank;
    match series {
        Series::A => {
            let amb = n + 1;
            let mut v = Vec::new();
            for i in 0..n {
                let mut e = vec![0i64; amb];
                e[i] = 1;
                e[i + 1] = -1;
                v.push(e);
            }
            (v, 1, amb)
        }
        Series::B | Series::C | Series::D => {
            let amb = n;
            let mut v = Vec::new();
            for i in 0..n.saturating_sub(1) {
                let mut e = vec![0i64; amb];
                e[i] = 1;
                e[i + 1] = -1;
                v.push(e);
            }
            let mut last = vec![0i64; amb];
            match series {
                Series::B => last[n - 1] = 1,
                Series::C => last[n - 1] = 2,
                Series::D => {
                    if n >= 2 {
                        last[n - 2] = 1;
                        last[n - 1] = 1;
                    }
                }
                _ => unreachable!(),
            }
            v.push(last);
            (v, 1, amb)
        }
        Series::G => {
            (vec![vec![1, -1, 0], vec![-2, 1, 1]], 1, 3)
        }
        Series::F => {
            // times 2: α1 = e2−e3, α2 = e3−e4, α3 = e4, α4 = (e1−e2−e3−e4)/2
            (
                vec![
                    vec![0, 2, -2, 0],
                    vec![0, 0, 2, -2],
                    vec![0, 0, 0, 2],
                    vec![1, -1, -1, -1],
                ],
                2,
                4,
            )
        }
        Series::E => {
            // times 2, Bourbaki: α1 = (e1+e8)/2 − (e2+...+e7)/2, α2 = e1+e2,
            // α_k = e_{k−2} − e_{k−3} for k = 3..n.
            let mut v = vec![
                vec![1, -1, -1, -1, -1, -1, -1, 1],
                vec![2, 2, 0, 0, 0, 0, 0, 0],
            ];
            for k in 3..=n {
                let mut e = vec![0i64; 8];
                e[k - 2] = 2;
                e[k - 3] = -2;
                v.push(e);
            }
            (v, 2, 8)
        }
    }
}

/// Expected number of positive roots per type.
pub fn expected_positive_count(series: Series, n: usize) -> usize {
    match series {
        Series::A => n * (n + 1) / 2,
        Series::B | Series::C => n * n,
        Series::D => n * (n - 1),
        Series::G => 6,
        Series::F => 24,
        Series::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn rs(series: Series, n: usize) -> RootSystem {
        RootSystem::build(series, n).unwrap()
    }

    #[test]
    fn positive_root_counts() {
        let cases = [
            (Series::A, 1),
            (Series::A, 5),
            (Series::B, 3),
            (Series::C, 2),
            (Series::C, 6),
            (Series::D, 4),
            (Series::D, 6),
            (Series::G, 2),
            (Series::F, 4),
            (Series::E, 6),
            (Series::E, 7),
            (Series::E, 8),
        ];
        for (s, n) in cases {
            let r = rs(s, n);
            assert_eq!(r.num_positive_roots(), expected_positive_count(s, n), "{s}{n}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(RootSystem::build(Series::C, 1).is_err());
        assert!(RootSystem::build(Series::D, 3).is_err());
        assert!(RootSystem::build(Series::E, 5).is_err());
        assert!(RootSystem::build(Series::F, 3).is_err());
        assert!(RootSystem::build(Series::G, 3).is_err());
    }

    #[test]
    fn a1_positive_roots() {
        let r = rs(Series::A, 1);
        assert_eq!(r.positive_roots(), &[Root::simple(0)]);
    }

    #[test]
    fn g2_highest_short_root() {
        let r = rs(Series::G, 2);
        assert_eq!(r.num_positive_roots(), 6);
        // highest short root = 2α1 + α2
        let gamma = Root::from_slice(&[2, 1]);
        assert!(r.is_positive_root(&gamma));
        let shortest_sq = r.inner(&Root::simple(0), &Root::simple(0));
        assert_eq!(r.inner(&gamma, &gamma), shortest_sq);
        // and it is the highest among the short roots
        for root in r.positive_roots() {
            if r.inner(root, root) == shortest_sq {
                assert!(root.height(2) <= gamma.height(2));
            }
        }
    }

    #[test]
    fn f4_contains_highest_root() {
        let r = rs(Series::F, 4);
        assert!(r.is_positive_root(&Root::from_slice(&[2, 3, 4, 2])));
    }

    #[test]
    fn every_reflection_permutes_roots() {
        for (s, n) in [(Series::C, 3), (Series::D, 4), (Series::F, 4), (Series::G, 2)] {
            let r = rs(s, n);
            let all: Vec<Root> = r
                .positive_roots()
                .iter()
                .copied()
                .chain(r.positive_roots().iter().map(|x| x.neg()))
                .collect();
            for beta in r.positive_roots() {
                let w = r.reflection(beta).unwrap();
                for gamma in &all {
                    assert!(r.is_root(&w.apply(gamma)));
                }
                assert!(compose(&w, &w).unwrap().is_identity());
                assert_eq!(w.apply(beta), beta.neg());
                assert!(matches!(w.mat.det(), 1 | -1));
            }
        }
    }

    #[test]
    fn reflection_rejects_non_root() {
        let r = rs(Series::C, 2);
        assert_eq!(r.reflection(&Root::from_slice(&[5, 0])), Err(RootError::NotARoot));
        assert_eq!(r.reflection(&Root::zero()), Err(RootError::NotARoot));
    }

    #[test]
    fn reflection_length_c2_long() {
        let r = rs(Series::C, 2);
        // 2e1 = 2α1 + α2
        let beta = r.euclid_to_root(&[2, 0]).unwrap();
        assert_eq!(beta, Root::from_slice(&[2, 1]));
        let w = r.reflection(&beta).unwrap();
        assert_eq!(r.length(&w), 3);
    }

    #[test]
    fn reflection_length_e6_highest() {
        let r = rs(Series::E, 6);
        let beta = Root::from_slice(&[1, 2, 2, 3, 2, 1]);
        let w = r.reflection(&beta).unwrap();
        // 2·height − 1 for the highest root of a simply-laced system
        assert_eq!(r.length(&w), 21);
        assert_eq!(2 * beta.height(6) - 1, 21);
    }

    #[test]
    fn longest_element_lengths() {
        let r = rs(Series::C, 2);
        assert!(r.longest_element(&[]).is_identity());
        let w0 = r.longest();
        assert_eq!(r.length(&w0), 4);
        // w0 = −1 in C2
        let mut minus = IntMat::identity(2);
        minus.set(0, 0, -1);
        minus.set(1, 1, -1);
        assert_eq!(w0.mat, minus);

        assert_eq!(rs(Series::E, 6).length(&rs(Series::E, 6).longest()), 36);
        assert_eq!(rs(Series::E, 8).length(&rs(Series::E, 8).longest()), 120);
    }

    #[test]
    fn longest_parabolic_f4() {
        let r = rs(Series::F, 4);
        let wj = r.longest_element(&[1, 2, 3]);
        // W_J of type C3/B3 has 9 positive roots
        assert_eq!(r.length(&wj), 9);
        let w0 = r.longest();
        let w = compose(&w0, &wj).unwrap();
        // w0 w_J is the w(O) of the minimal class; its length is 24 − 9
        assert_eq!(r.length(&w), 15);
        let beta1 = Root::from_slice(&[2, 3, 4, 2]);
        assert_eq!(w.mat, r.reflection(&beta1).unwrap().mat);
    }

    #[test]
    fn compose_examples() {
        let r = rs(Series::C, 2);
        let s1 = r.simple_reflection(0);
        assert!(compose(&s1, &s1).unwrap().is_identity());
        let w0 = r.longest();
        assert!(compose(&w0, &w0).unwrap().is_identity());
        // commuting product of orthogonal reflections is an involution
        let b1 = r.euclid_to_root(&[2, 0]).unwrap();
        let b2 = r.euclid_to_root(&[0, 2]).unwrap();
        let w = r.reflection_product(&[b1, b2]).unwrap();
        assert!(compose(&w, &w).unwrap().is_identity());
        // mismatched ranks rejected
        let r3 = rs(Series::C, 3);
        assert_eq!(
            compose(&r3.simple_reflection(0), &s1),
            Err(RootError::DimMismatch)
        );
    }

    #[test]
    fn lengths_of_inverse_and_simple_products() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (s, n) in [(Series::C, 3), (Series::D, 4), (Series::G, 2)] {
            let r = rs(s, n);
            for _ in 0..40 {
                let mut w = WeylElement::identity(n);
                for _ in 0..rng.gen_range(0..12) {
                    let i = rng.gen_range(0..n);
                    w = compose(&w, &r.simple_reflection(i)).unwrap();
                }
                assert_eq!(r.length(&w), r.length(&w.inverse(&r)));
                for i in 0..n {
                    let ws = compose(&w, &r.simple_reflection(i)).unwrap();
                    let diff = r.length(&ws) as i64 - r.length(&w) as i64;
                    assert!(diff == 1 || diff == -1);
                }
            }
            assert_eq!(r.length(&r.longest()), r.num_positive_roots());
        }
    }

    #[test]
    fn rank_one_minus_examples() {
        let c3 = rs(Series::C, 3);
        let id = TwistedElement::untwisted(WeylElement::identity(3));
        assert_eq!(c3.rank_one_minus(&id), 0);
        // w0 = −1 in C_n
        let w0 = TwistedElement::untwisted(c3.longest());
        assert_eq!(c3.rank_one_minus(&w0), 3);

        // τw0 in E6 has rank 6: ℓ(w0) + rk = 36 + 6
        let e6 = rs(Series::E, 6);
        let tau = DiagramAutomorphism::standard(&e6).unwrap();
        let t = TwistedElement::new(tau, 1, e6.longest());
        assert_eq!(e6.rank_one_minus(&t), 6);
        assert_eq!(e6.criterion_value(&t), 42);
    }

    #[test]
    fn criterion_value_twisted_a_series() {
        // (τ, w0) in A_{2m}: m(2m+1) + 2m = 2m² + 3m
        for m in 1..=4usize {
            let n = 2 * m;
            let a = rs(Series::A, n);
            let tau = DiagramAutomorphism::standard(&a).unwrap();
            let t = TwistedElement::new(tau, 1, a.longest());
            assert_eq!(a.criterion_value(&t), 2 * m * m + 3 * m);
        }
    }

    #[test]
    fn criterion_value_triality() {
        let d4 = rs(Series::D, 4);
        let phi = DiagramAutomorphism::triality(&d4).unwrap();
        assert_eq!(phi.order, 3);
        // φ³ = 1, φ preserves the pairing
        assert!(phi.power_matrix(3).is_identity());
        let w = compose(&d4.longest(), &d4.simple_reflection(1)).unwrap();
        let t = TwistedElement::new(phi, 1, w);
        assert_eq!(d4.length(&w), 11);
        assert_eq!(d4.criterion_value(&t), 14);
        // w0·s2 is also the product of the three τ-cycled reflections
        let deltas = [
            Root::from_slice(&[1, 1, 1, 0]),
            Root::from_slice(&[1, 1, 0, 1]),
            Root::from_slice(&[0, 1, 1, 1]),
        ];
        assert_eq!(d4.reflection_product(&deltas).unwrap().mat, w.mat);
    }

    #[test]
    fn diagram_automorphisms_preserve_structure() {
        for (s, n) in [(Series::A, 4), (Series::D, 5), (Series::E, 6)] {
            let r = rs(s, n);
            let tau = DiagramAutomorphism::standard(&r).unwrap();
            assert!(tau.power_matrix(2).is_identity());
            // preserves the inner product matrix exactly
            for i in 0..n {
                for j in 0..n {
                    let ti = tau.perm[i] as usize;
                    let tj = tau.perm[j] as usize;
                    assert_eq!(r.gram.get(ti, tj), r.gram.get(i, j));
                }
            }
            // permutes the positive roots
            let w = WeylElement { mat: tau.mat, cached_length: None };
            for root in r.positive_roots() {
                assert!(r.is_positive_root(&w.apply(root)));
            }
        }
    }

    #[test]
    fn bruhat_order_basics() {
        let g2 = rs(Series::G, 2);
        let id = WeylElement::identity(2);
        let w0 = g2.longest();
        for beta in g2.positive_roots() {
            let w = g2.reflection(beta).unwrap();
            assert!(g2.bruhat_leq(&id, &w).unwrap());
            assert!(g2.bruhat_leq(&w, &w0).unwrap());
            // w0 ≤ w implies w = w0
            assert_eq!(g2.bruhat_leq(&w0, &w).unwrap(), w.mat == w0.mat);
        }
        // s_{β1} ≤ w(Ã1^{(3)}) = w0
        let b1 = g2.reflection(&Root::from_slice(&[3, 2])).unwrap();
        assert!(g2.bruhat_leq(&b1, &w0).unwrap());
        // mixed ranks rejected
        let a1 = rs(Series::A, 1);
        assert!(g2.bruhat_leq(&a1.simple_reflection(0), &w0).is_err());
    }

    #[test]
    fn bruhat_refines_length_randomized() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let r = rs(Series::C, 3);
        let mut sample = Vec::new();
        for _ in 0..25 {
            let mut w = WeylElement::identity(3);
            for _ in 0..rng.gen_range(0..10) {
                w = compose(&w, &r.simple_reflection(rng.gen_range(0..3))).unwrap();
            }
            sample.push(w);
        }
        for u in &sample {
            assert!(r.bruhat_leq(u, u).unwrap());
            for v in &sample {
                if r.bruhat_leq(u, v).unwrap() {
                    assert!(r.length(u) <= r.length(v));
                    if r.bruhat_leq(v, u).unwrap() {
                        assert_eq!(u.mat, v.mat);
                    }
                }
                // transitivity against a third element
                for z in sample.iter().take(8) {
                    if r.bruhat_leq(u, v).unwrap() && r.bruhat_leq(v, z).unwrap() {
                        assert!(r.bruhat_leq(u, z).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn involution_decomposition_examples() {
        let c2 = rs(Series::C, 2);
        assert!(c2
            .involution_orthogonal_decomposition(&WeylElement::identity(2))
            .unwrap()
            .is_empty());
        // w0 in C2 decomposes into the two long roots 2e1, 2e2
        let dec = c2.involution_orthogonal_decomposition(&c2.longest()).unwrap();
        let b1 = c2.euclid_to_root(&[2, 0]).unwrap();
        let b2 = c2.euclid_to_root(&[0, 2]).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&b1) && dec.contains(&b2));
        // already-decomposed product comes back as the same set
        let f4 = rs(Series::F, 4);
        let r1 = Root::from_slice(&[2, 3, 4, 2]);
        let r2 = Root::from_slice(&[0, 1, 2, 2]);
        assert!(f4.is_orthogonal(&r1, &r2));
        let w = f4.reflection_product(&[r1, r2]).unwrap();
        let dec = f4.involution_orthogonal_decomposition(&w).unwrap();
        assert_eq!(dec.len(), 2);
        assert!(dec.contains(&r1) && dec.contains(&r2));
        // non-involution rejected
        let s0s1 = compose(&f4.simple_reflection(0), &f4.simple_reflection(1)).unwrap();
        assert_eq!(
            f4.involution_orthogonal_decomposition(&s0s1),
            Err(RootError::NotAnInvolution)
        );
    }

    #[test]
    fn involution_rank_matches_decomposition_size() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for (s, n) in [(Series::C, 3), (Series::D, 4), (Series::A, 4)] {
            let r = rs(s, n);
            let mut found = 0;
            while found < 15 {
                let mut w = WeylElement::identity(n);
                for _ in 0..rng.gen_range(0..14) {
                    w = compose(&w, &r.simple_reflection(rng.gen_range(0..n))).unwrap();
                }
                if compose(&w, &w).unwrap().is_identity() && !w.is_identity() {
                    found += 1;
                    let dec = r.involution_orthogonal_decomposition(&w).unwrap();
                    let t = TwistedElement::untwisted(w);
                    assert_eq!(dec.len(), r.rank_one_minus(&t));
                    assert_eq!(r.reflection_product(&dec).unwrap().mat, w.mat);
                    for (i, a) in dec.iter().enumerate() {
                        for b in dec.iter().skip(i + 1) {
                            assert!(r.is_orthogonal(a, b));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn euclid_translation_classical() {
        let c3 = rs(Series::C, 3);
        // 2e1 = 2α1 + 2α2 + α3
        assert_eq!(c3.euclid_to_root(&[2, 0, 0]).unwrap(), Root::from_slice(&[2, 2, 1]));
        // e1 + e2 = α1 + 2α2 + α3
        assert_eq!(c3.euclid_to_root(&[1, 1, 0]).unwrap(), Root::from_slice(&[1, 2, 1]));
        let d4 = rs(Series::D, 4);
        // e3 + e4 = α4
        assert_eq!(d4.euclid_to_root(&[0, 0, 1, 1]).unwrap(), Root::simple(3));
        // round trip through root_to_euclid
        for root in d4.positive_roots() {
            let e = d4.root_to_euclid(root).unwrap().to_vec();
            assert_eq!(d4.euclid_to_root(&e).unwrap(), *root);
        }
        assert!(c3.euclid_to_root(&[1, 1, 1]).is_none());
    }

    #[test]
    fn positive_roots_unique_and_closed() {
        for (s, n) in [(Series::B, 3), (Series::C, 4), (Series::D, 5), (Series::F, 4)] {
            let r = rs(s, n);
            let pos = r.positive_roots();
            for (i, a) in pos.iter().enumerate() {
                for b in pos.iter().skip(i + 1) {
                    assert_ne!(a, b);
                }
            }
            // heights weakly increase in the stored order
            for pair in pos.windows(2) {
                assert!(pair[0].height(n) <= pair[1].height(n));
            }
        }
    }
}
