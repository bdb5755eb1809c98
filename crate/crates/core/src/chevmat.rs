//! Concrete matrix models of GL/SL/Sp/O/SO over GF(2^k).
//!
//! Basis and form: v_1..v_{2n} with f(v_i, v_{2n+1−i}) = 1 (antidiagonal
//! Gram matrix) and, for the orthogonal groups, Q(x) = Σ_{i≤n} x_i·x_{2n+1−i}.
//! With this choice the Borel subgroup is upper triangular, the Weyl
//! representatives n_α are monomial, and B_G = B_GL ∩ G.
//!
//! Each root α gets an entry pattern so that x_α(ξ) = 1 + ξ·Σ E_{rc}; in
//! characteristic 2 every Chevalley structure constant in these models is 1,
//! so the patterns carry no signs. h_α(z) is diagonal with exponents
//! ⟨weight, α∨⟩, and n_α = x_α(1)x_{−α}(1)x_α(1).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::classlabels::{ClassLabel, Eps, GroupKind, Partition};
use crate::gf2k::{Fel, GfField};
use crate::linalg::{GfMat, MAX_RANK};
use crate::rootcore::{Root, RootSystem, Series, WeylElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChevError {
    NotARoot,
    ZeroScalar,
    NonOrthogonal,
    NotPositive,
    NotUnipotent,
    NoBilinearForm,
    NotInGroup(&'static str),
    CellOutsideWeyl,
    Singular,
    UnsupportedSize { kind: MatrixKind, n: usize },
    BadRecipe(String),
    ParseError(String),
    LengthMismatch,
}

impl fmt::Display for ChevError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChevError::NotARoot => write!(f, "not a root of this group's system"),
            ChevError::ZeroScalar => write!(f, "torus parameter must be nonzero"),
            ChevError::NonOrthogonal => write!(f, "roots are not pairwise orthogonal"),
            ChevError::NotPositive => write!(f, "roots must be positive"),
            ChevError::NotUnipotent => write!(f, "element is not unipotent"),
            ChevError::NoBilinearForm => write!(f, "group carries no bilinear form"),
            ChevError::NotInGroup(why) => write!(f, "element violates group membership: {why}"),
            ChevError::CellOutsideWeyl => {
                write!(f, "extracted permutation lies outside the Weyl group of the spec")
            }
            ChevError::Singular => write!(f, "matrix is singular"),
            ChevError::UnsupportedSize { kind, n } => {
                write!(f, "no matrix model for {kind}({n}) in this engine")
            }
            ChevError::BadRecipe(s) => write!(f, "bad representative recipe: {s}"),
            ChevError::ParseError(s) => write!(f, "cannot parse element: {s}"),
            ChevError::LengthMismatch => write!(f, "roots and scalars differ in length"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    GL,
    SL,
    Sp,
    O,
    SO,
}

impl MatrixKind {
    pub fn label_kind(&self) -> GroupKind {
        match self {
            MatrixKind::GL | MatrixKind::SL => GroupKind::GL,
            MatrixKind::Sp => GroupKind::Sp,
            MatrixKind::O => GroupKind::O,
            MatrixKind::SO => GroupKind::SO,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            MatrixKind::GL => "gl",
            MatrixKind::SL => "sl",
            MatrixKind::Sp => "sp",
            MatrixKind::O => "o",
            MatrixKind::SO => "so",
        }
    }

    pub fn from_tag(s: &str) -> Option<MatrixKind> {
        Some(match s {
            "gl" => MatrixKind::GL,
            "sl" => MatrixKind::SL,
            "sp" => MatrixKind::Sp,
            "o" => MatrixKind::O,
            "so" => MatrixKind::SO,
            _ => return None,
        })
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag().to_uppercase())
    }
}

/// One step of a representative recipe. `Tau` marks the outer coset and may
/// only appear as the first step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RecipeStep {
    X { root: Root, xi: Fel },
    N { root: Root },
    H { root: Root, z: Fel },
    Tau,
}

/// τ^twist · g, with the automorphism part kept symbolic. For the D series τ
/// is itself an orthogonal matrix and the product can be materialized; for
/// the A series only the pair exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepElement {
    pub twist: bool,
    pub g: GfMat,
}

/// A matrix model of one classical group over one GF(2^k).
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub kind: MatrixKind,
    /// n of Sp(2n)/O(2n)/SO(2n); matrix size for GL/SL.
    pub nparam: usize,
    pub m: usize,
    pub field: GfField,
    pub rs: RootSystem,
    patterns: BTreeMap<Root, Vec<(usize, usize)>>,
    coroot_exps: BTreeMap<Root, Vec<i8>>,
    gram: Option<GfMat>,
}

impl GroupSpec {
    pub fn new(kind: MatrixKind, nparam: usize, field: GfField) -> Result<GroupSpec, ChevError> {
        let (m, rs) = match kind {
            MatrixKind::GL | MatrixKind::SL => {
                if !(2..=MAX_RANK + 1).contains(&nparam) {
                    return Err(ChevError::UnsupportedSize { kind, n: nparam });
                }
                (nparam, RootSystem::build(Series::A, nparam - 1).unwrap())
            }
            MatrixKind::Sp => {
                if !(2..=MAX_RANK).contains(&nparam) {
                    return Err(ChevError::UnsupportedSize { kind, n: nparam });
                }
                (2 * nparam, RootSystem::build(Series::C, nparam).unwrap())
            }
            MatrixKind::O | MatrixKind::SO => {
                if !(2..=MAX_RANK).contains(&nparam) {
                    return Err(ChevError::UnsupportedSize { kind, n: nparam });
                }
                (2 * nparam, RootSystem::build_d_relaxed(nparam))
            }
        };
        let mut patterns = BTreeMap::new();
        let mut coroot_exps = BTreeMap::new();
        let n = nparam;
        for plus in rs.positive_roots().to_vec() {
            let e = rs.root_to_euclid(&plus).unwrap().to_vec();
            let pat = match kind {
                MatrixKind::GL | MatrixKind::SL => {
                    let i = e.iter().position(|&x| x == 1).unwrap();
                    let j = e.iter().position(|&x| x == -1).unwrap();
                    vec![(i, j)]
                }
                MatrixKind::Sp if e.iter().any(|&x| x == 2) => {
                    let i = e.iter().position(|&x| x == 2).unwrap();
                    vec![(i, 2 * n - 1 - i)]
                }
                _ => {
                    // short C roots and all D roots: e_i ± e_j
                    let i = e.iter().position(|&x| x != 0).unwrap();
                    let j = i + 1 + e[i + 1..].iter().position(|&x| x != 0).unwrap();
                    if e[j] == -1 {
                        // e_i − e_j acts like the GL root on rows i, j and
                        // its mirror on the paired rows
                        vec![(i, j), (2 * n - 1 - j, 2 * n - 1 - i)]
                    } else {
                        // e_i + e_j
                        vec![(i, 2 * n - 1 - j), (j, 2 * n - 1 - i)]
                    }
                }
            };
            // coroot exponents per basis weight: ⟨wt_r, α∨⟩ = 2(wt_r, α)/(α, α)
            let sq: i64 = e.iter().map(|&x| x * x).sum();
            let wt = |r: usize| -> Vec<i64> {
                let mut v = vec![0i64; e.len()];
                match kind {
                    MatrixKind::GL | MatrixKind::SL => v[r] = 1,
                    _ => {
                        if r < n {
                            v[r] = 1;
                        } else {
                            v[2 * n - 1 - r] = -1;
                        }
                    }
                }
                v
            };
            let exps: Vec<i8> = (0..m)
                .map(|r| {
                    let num: i64 = 2 * wt(r).iter().zip(&e).map(|(a, b)| a * b).sum::<i64>();
                    debug_assert_eq!(num % sq, 0);
                    (num / sq) as i8
                })
                .collect();
            let minus = plus.neg();
            let tpat: Vec<(usize, usize)> = pat.iter().map(|&(r, c)| (c, r)).collect();
            let nexps: Vec<i8> = exps.iter().map(|&x| -x).collect();
            patterns.insert(plus, pat);
            patterns.insert(minus, tpat);
            coroot_exps.insert(plus, exps);
            coroot_exps.insert(minus, nexps);
        }
        let gram = match kind {
            MatrixKind::GL | MatrixKind::SL => None,
            _ => {
                let mut j = GfMat::zero(m);
                for i in 0..m {
                    j.set(i, m - 1 - i, 1);
                }
                Some(j)
            }
        };
        Ok(GroupSpec { kind, nparam, m, field, rs, patterns, coroot_exps, gram })
    }

    pub fn has_form(&self) -> bool {
        self.gram.is_some()
    }

    /// f(x, y) = xᵀJy for Sp/O/SO.
    pub fn form(&self, x: &[Fel], y: &[Fel]) -> Result<Fel, ChevError> {
        if self.gram.is_none() {
            return Err(ChevError::NoBilinearForm);
        }
        let m = self.m;
        let mut acc = 0;
        for i in 0..m {
            acc ^= self.field.mul(x[i], y[m - 1 - i]);
        }
        Ok(acc)
    }

    /// Q(x) = Σ_{i≤n} x_i·x_{2n+1−i} for O/SO.
    pub fn quad(&self, x: &[Fel]) -> Result<Fel, ChevError> {
        if !matches!(self.kind, MatrixKind::O | MatrixKind::SO) {
            return Err(ChevError::NoBilinearForm);
        }
        let mut acc = 0;
        for i in 0..self.nparam {
            acc ^= self.field.mul(x[i], x[self.m - 1 - i]);
        }
        Ok(acc)
    }

    /// The root subgroup element x_α(ξ).
    pub fn x_alpha(&self, root: &Root, xi: Fel) -> Result<GfMat, ChevError> {
        let pat = self.patterns.get(root).ok_or(ChevError::NotARoot)?;
        let mut g = GfMat::identity(self.m);
        for &(r, c) in pat {
            g.set(r, c, xi);
        }
        Ok(g)
    }

    /// The torus element h_α(z), z ≠ 0.
    pub fn h_alpha(&self, root: &Root, z: Fel) -> Result<GfMat, ChevError> {
        if z == 0 {
            return Err(ChevError::ZeroScalar);
        }
        let exps = self.coroot_exps.get(root).ok_or(ChevError::NotARoot)?;
        let mut g = GfMat::zero(self.m);
        for (r, &e) in exps.iter().enumerate() {
            g.set(r, r, self.field.pow(z, e as i32).unwrap());
        }
        Ok(g)
    }

    /// The monomial Weyl representative n_α = x_α(1)·x_{−α}(1)·x_α(1)
    /// (signs vanish in characteristic 2).
    pub fn n_alpha(&self, root: &Root) -> Result<GfMat, ChevError> {
        let a = self.x_alpha(root, 1)?;
        let b = self.x_alpha(&root.neg(), 1)?;
        Ok(a.mul(&b, &self.field).mul(&a, &self.field))
    }

    /// Membership check for the declared group, with the reason on failure.
    pub fn is_member(&self, g: &GfMat) -> Result<(), ChevError> {
        if g.m != self.m {
            return Err(ChevError::NotInGroup("wrong size"));
        }
        let f = &self.field;
        if g.rank(f) != self.m {
            return Err(ChevError::NotInGroup("singular"));
        }
        if self.kind == MatrixKind::SL && g.det(f) != 1 {
            return Err(ChevError::NotInGroup("determinant is not 1"));
        }
        if let Some(j) = &self.gram {
            let gt = g.transpose();
            if gt.mul(j, f).mul(g, f) != *j {
                return Err(ChevError::NotInGroup("bilinear form not preserved"));
            }
        }
        if matches!(self.kind, MatrixKind::O | MatrixKind::SO) {
            // Q(gx) − Q(x) is a quadratic form; vanishing on a basis and on
            // all pairwise sums of basis vectors makes it vanish everywhere.
            let m = self.m;
            let col = |i: usize| -> Vec<Fel> { (0..m).map(|r| g.get(r, i)).collect() };
            for i in 0..m {
                let mut ei = vec![0; m];
                ei[i] = 1;
                if self.quad(&col(i))? != self.quad(&ei)? {
                    return Err(ChevError::NotInGroup("quadratic form not preserved"));
                }
                for jx in i + 1..m {
                    let mut eij = vec![0; m];
                    eij[i] = 1;
                    eij[jx] = 1;
                    let sum: Vec<Fel> =
                        (0..m).map(|r| g.get(r, i) ^ g.get(r, jx)).collect();
                    if self.quad(&sum)? != self.quad(&eij)? {
                        return Err(ChevError::NotInGroup("quadratic form not preserved"));
                    }
                }
            }
        }
        if self.kind == MatrixKind::SO && self.dickson_invariant(g)? != 0 {
            return Err(ChevError::NotInGroup("Dickson invariant is 1"));
        }
        Ok(())
    }

    /// Dickson invariant of an orthogonal element in characteristic 2:
    /// rank(g + 1) mod 2.
    pub fn dickson_invariant(&self, g: &GfMat) -> Result<u8, ChevError> {
        if !matches!(self.kind, MatrixKind::O | MatrixKind::SO) {
            return Err(ChevError::NoBilinearForm);
        }
        let gp1 = g.add(&GfMat::identity(self.m));
        Ok((gp1.rank(&self.field) % 2) as u8)
    }

    /// The exchange identity: with g = x_{β1}(ξ1⁻¹)···x_{βℓ}(ξℓ⁻¹) and
    /// pairwise-orthogonal positive roots β_i,
    /// g·x_{−β1}(ξ1)···x_{−βℓ}(ξℓ)·g⁻¹ = n_{β1}···n_{βℓ}·h_{β1}(ξ1)···h_{βℓ}(ξℓ)
    /// in characteristic 2 (the trailing x_{β}(2ξ⁻¹) factors vanish).
    /// Returns whether the identity holds as matrices.
    pub fn verify_scambio(&self, roots: &[Root], xis: &[Fel]) -> Result<bool, ChevError> {
        if roots.len() != xis.len() {
            return Err(ChevError::LengthMismatch);
        }
        if xis.iter().any(|&x| x == 0) {
            return Err(ChevError::ZeroScalar);
        }
        for r in roots {
            if !self.rs.is_positive_root(r) {
                return Err(ChevError::NotPositive);
            }
        }
        for (i, a) in roots.iter().enumerate() {
            for b in roots.iter().skip(i + 1) {
                if !self.rs.is_orthogonal(a, b) {
                    return Err(ChevError::NonOrthogonal);
                }
            }
        }
        let f = &self.field;
        let mut g = GfMat::identity(self.m);
        let mut inner = GfMat::identity(self.m);
        let mut rhs = GfMat::identity(self.m);
        let mut h = GfMat::identity(self.m);
        for (r, &xi) in roots.iter().zip(xis) {
            g = g.mul(&self.x_alpha(r, f.inv(xi).unwrap())?, f);
            inner = inner.mul(&self.x_alpha(&r.neg(), xi)?, f);
            rhs = rhs.mul(&self.n_alpha(r)?, f);
            h = h.mul(&self.h_alpha(r, xi)?, f);
        }
        let lhs = g.mul(&inner, f).mul(&g.inverse(f).map_err(|_| ChevError::Singular)?, f);
        Ok(lhs == rhs.mul(&h, f))
    }

    /// Jordan type of a unipotent element, from the ranks of (u−1)^i:
    /// c(i) = r_{i−1} − 2·r_i + r_{i+1}.
    pub fn jordan_type(&self, u: &GfMat) -> Result<Partition, ChevError> {
        let f = &self.field;
        let m = self.m;
        let nil = u.add(&GfMat::identity(m));
        let mut ranks = vec![m];
        let mut p = nil.clone();
        while ranks.last() != Some(&0) {
            ranks.push(p.rank(f));
            if ranks.len() > m + 2 {
                return Err(ChevError::NotUnipotent);
            }
            p = p.mul(&nil, f);
        }
        if ranks.len() > m + 1 && ranks[m] != 0 {
            return Err(ChevError::NotUnipotent);
        }
        let r = |i: i64| -> i64 {
            if i < 0 {
                m as i64
            } else {
                ranks.get(i as usize).copied().unwrap_or(0) as i64
            }
        };
        let mut mults = Vec::new();
        for i in 1..=m as i64 {
            let c = r(i - 1) - 2 * r(i) + r(i + 1);
            debug_assert!(c >= 0);
            if c > 0 {
                mults.push((i as u32, c as u32));
            }
        }
        Ok(Partition::from_mults(&mults))
    }

    /// Full (λ, ε) label of a unipotent element of Sp/O/SO: ε(i) = 0 when
    /// the quadratic map x ↦ f((u−1)^{i−1}x, x) vanishes on ker(u−1)^i and 1
    /// otherwise, decided exactly on a kernel basis and its pairwise sums.
    pub fn epsilon_invariant(&self, u: &GfMat) -> Result<ClassLabel, ChevError> {
        if !matches!(self.kind, MatrixKind::Sp | MatrixKind::O | MatrixKind::SO) {
            return Err(ChevError::NoBilinearForm);
        }
        let lambda = self.jordan_type(u)?;
        let f = &self.field;
        let m = self.m;
        let nil = u.add(&GfMat::identity(m));
        let mut eps: Vec<(u32, Eps)> = Vec::new();
        let mut i = 2u32;
        while i <= lambda.largest() {
            if lambda.mult(i) != 0 {
                let npow_im1 = nil.pow(i as usize - 1, f);
                let kernel = nil.pow(i as usize, f).nullspace(f);
                let q = |x: &[Fel]| -> Fel {
                    let nx = npow_im1.apply(x, f);
                    self.form(&nx, x).unwrap()
                };
                let mut vanishes = true;
                'outer: for (a, va) in kernel.iter().enumerate() {
                    if q(va) != 0 {
                        vanishes = false;
                        break;
                    }
                    for vb in kernel.iter().skip(a + 1) {
                        let sum: Vec<Fel> = va.iter().zip(vb).map(|(x, y)| x ^ y).collect();
                        if q(&sum) != 0 {
                            vanishes = false;
                            break 'outer;
                        }
                    }
                }
                eps.push((i, if vanishes { Eps::Zero } else { Eps::One }));
            }
            i += 2;
        }
        ClassLabel::form_group(self.kind.label_kind(), self.nparam as u32, lambda, &eps)
            .map_err(|e| ChevError::BadRecipe(format!("computed label invalid: {e}")))
    }

    /// The permutation p with g ∈ B·P·B (B upper triangular), where the
    /// monomial matrix P has entries at (p(j), j). Fails on singular input.
    fn bruhat_permutation(&self, g: &GfMat) -> Result<Vec<usize>, ChevError> {
        let f = &self.field;
        let m = self.m;
        let mut a = g.clone();
        let mut p = vec![usize::MAX; m];
        let mut used = vec![false; m];
        for j in 0..m {
            // lowest not-yet-pivoted row with a nonzero entry in column j
            let mut pivot = None;
            for r in (0..m).rev() {
                if !used[r] && a.get(r, j) != 0 {
                    pivot = Some(r);
                    break;
                }
            }
            let Some(i) = pivot else { return Err(ChevError::Singular) };
            p[j] = i;
            used[i] = true;
            let inv = f.inv(a.get(i, j)).unwrap();
            // clear the rest of column j with row ops from the lower row i
            for r in 0..i {
                let factor = f.mul(a.get(r, j), inv);
                if factor != 0 {
                    for c in 0..m {
                        let v = f.mul(factor, a.get(i, c));
                        a.set(r, c, a.get(r, c) ^ v);
                    }
                }
            }
            // clear row i to the right with column ops from column j
            for c in j + 1..m {
                let factor = f.mul(a.get(i, c), inv);
                if factor != 0 {
                    for r in 0..m {
                        let v = f.mul(factor, a.get(r, j));
                        a.set(r, c, a.get(r, c) ^ v);
                    }
                }
            }
        }
        Ok(p)
    }

    /// Converts a matrix-level permutation to the Weyl element it induces on
    /// the character lattice. For Sp/O/SO the permutation must respect the
    /// pairing i ↔ m+1−i (signed permutation), and for SO it must have an
    /// even number of sign changes.
    fn permutation_to_weyl(&self, p: &[usize]) -> Result<WeylElement, ChevError> {
        let n = self.rs.rank;
        let mut mat = crate::linalg::IntMat::zero(n);
        match self.kind {
            MatrixKind::GL | MatrixKind::SL => {
                for j in 0..n {
                    // w(α_j) = e_{p(j)+1} − e_{p(j+1)+1}
                    let mut e = vec![0i64; self.m];
                    e[p[j]] = 1;
                    e[p[j + 1]] += -1;
                    let img = self.rs.euclid_to_root(&e).ok_or(ChevError::CellOutsideWeyl)?;
                    for i in 0..n {
                        mat.set(i, j, img.0[i] as i64);
                    }
                }
            }
            _ => {
                let half = self.nparam;
                for i in 0..self.m {
                    if p[self.m - 1 - i] != self.m - 1 - p[i] {
                        return Err(ChevError::CellOutsideWeyl);
                    }
                }
                if self.kind != MatrixKind::Sp {
                    let flips = (0..half).filter(|&i| p[i] >= half).count();
                    if flips % 2 == 1 {
                        return Err(ChevError::CellOutsideWeyl);
                    }
                }
                // signed permutation on e_1..e_n
                let image = |i: usize| -> (usize, i64) {
                    let t = p[i];
                    if t < half {
                        (t, 1)
                    } else {
                        (self.m - 1 - t, -1)
                    }
                };
                for j in 0..n {
                    let alpha = self.rs.root_to_euclid(&Root::simple(j)).unwrap().to_vec();
                    let mut e = vec![0i64; half];
                    for (i, &coef) in alpha.iter().enumerate() {
                        if coef != 0 {
                            let (t, s) = image(i);
                            e[t] += s * coef;
                        }
                    }
                    let img = self.rs.euclid_to_root(&e).ok_or(ChevError::CellOutsideWeyl)?;
                    for i in 0..n {
                        mat.set(i, j, img.0[i] as i64);
                    }
                }
            }
        }
        Ok(WeylElement { mat, cached_length: None })
    }

    /// The unique w with g ∈ BẇB, extracted from the bottom-left rank
    /// profile of g. For O-specs this requires an inner (Dickson 0) element;
    /// use [`GroupSpec::bruhat_cell_twisted`] for the outer coset.
    pub fn bruhat_cell(&self, g: &GfMat) -> Result<WeylElement, ChevError> {
        let p = self.bruhat_permutation(g)?;
        self.permutation_to_weyl(&p)
    }

    /// Bruhat cell allowing the outer coset of an O-spec: returns (twist, w)
    /// where the element lies in τ^twist·BẇB.
    pub fn bruhat_cell_twisted(&self, g: &GfMat) -> Result<(u8, WeylElement), ChevError> {
        match self.bruhat_cell(g) {
            Ok(w) => Ok((0, w)),
            Err(ChevError::CellOutsideWeyl) if self.kind == MatrixKind::O => {
                let tg = self.tau_matrix()?.mul(g, &self.field);
                Ok((1, self.bruhat_cell(&tg)?))
            }
            Err(e) => Err(e),
        }
    }

    /// The basis swap v_n ↔ v_{n+1}, an element of O(2n)∖SO(2n) realizing
    /// the graph automorphism of SO(2n).
    pub fn tau_matrix(&self) -> Result<GfMat, ChevError> {
        if !matches!(self.kind, MatrixKind::O | MatrixKind::SO) {
            return Err(ChevError::NoBilinearForm);
        }
        let mut t = GfMat::identity(self.m);
        let n = self.nparam;
        t.set(n - 1, n - 1, 0);
        t.set(n, n, 0);
        t.set(n - 1, n, 1);
        t.set(n, n - 1, 1);
        Ok(t)
    }

    /// The graph automorphism applied to a group element: conjugation by the
    /// basis swap for the D series, g ↦ J(gᵀ)⁻¹J⁻¹ for the A series.
    pub fn apply_graph_automorphism(&self, g: &GfMat) -> Result<GfMat, ChevError> {
        let f = &self.field;
        match self.kind {
            MatrixKind::GL | MatrixKind::SL => {
                let mut j = GfMat::zero(self.m);
                for i in 0..self.m {
                    j.set(i, self.m - 1 - i, 1);
                }
                let gti = g.transpose().inverse(f).map_err(|_| ChevError::Singular)?;
                Ok(j.mul(&gti, f).mul(&j, f))
            }
            MatrixKind::O | MatrixKind::SO => {
                let t = self.tau_matrix()?;
                Ok(t.mul(g, f).mul(&t, f))
            }
            MatrixKind::Sp => Err(ChevError::NoBilinearForm),
        }
    }

    /// Evaluates a recipe. τ may only appear first; the result is τ^twist·g.
    pub fn build_representative(&self, recipe: &[RecipeStep]) -> Result<RepElement, ChevError> {
        let f = &self.field;
        let mut twist = false;
        let mut g = GfMat::identity(self.m);
        for (idx, step) in recipe.iter().enumerate() {
            match step {
                RecipeStep::Tau => {
                    if idx != 0 {
                        return Err(ChevError::BadRecipe(String::from(
                            "tau must be the first factor",
                        )));
                    }
                    if !matches!(
                        self.kind,
                        MatrixKind::GL | MatrixKind::SL | MatrixKind::O | MatrixKind::SO
                    ) {
                        return Err(ChevError::BadRecipe(String::from(
                            "no graph automorphism for this kind",
                        )));
                    }
                    twist = true;
                }
                RecipeStep::X { root, xi } => g = g.mul(&self.x_alpha(root, *xi)?, f),
                RecipeStep::N { root } => g = g.mul(&self.n_alpha(root)?, f),
                RecipeStep::H { root, z } => g = g.mul(&self.h_alpha(root, *z)?, f),
            }
        }
        Ok(RepElement { twist, g })
    }

    /// The actual matrix of a representative, when one exists: g itself, or
    /// τ·g for a twisted D-series element (τ is a matrix there).
    pub fn materialize(&self, rep: &RepElement) -> Result<GfMat, ChevError> {
        if !rep.twist {
            return Ok(rep.g.clone());
        }
        let t = self.tau_matrix()?;
        Ok(t.mul(&rep.g, &self.field))
    }

    /// Whether τ^twist·g squares to the identity: (τg)² = τ(g)·g.
    pub fn is_involution(&self, rep: &RepElement) -> Result<bool, ChevError> {
        let f = &self.field;
        let sq = if rep.twist {
            self.apply_graph_automorphism(&rep.g)?.mul(&rep.g, f)
        } else {
            rep.g.mul(&rep.g, f)
        };
        Ok(sq.is_identity())
    }

    /// Serializes an element: header "kind:m:k:poly", then the hex dump of
    /// the k row-major bit-planes (LSB-first within each byte).
    pub fn serialize_element(&self, g: &GfMat) -> String {
        let k = self.field.degree();
        let m = self.m;
        let mut out = format!(
            "{}:{}:{}:{}\n",
            self.kind.tag(),
            m,
            k,
            self.field.modulus()
        );
        let plane_bytes = (m * m + 7) / 8;
        for plane in 0..k {
            let mut bytes = vec![0u8; plane_bytes];
            for idx in 0..m * m {
                let bit = (g.get(idx / m, idx % m) >> plane) & 1;
                bytes[idx / 8] |= (bit as u8) << (idx % 8);
            }
            for b in bytes {
                out.push_str(&format!("{b:02x}"));
            }
        }
        out.push('\n');
        out
    }

    /// Parses the serialization format back into a spec and element.
    pub fn parse_element(text: &str) -> Result<(GroupSpec, GfMat), ChevError> {
        let err = |s: &str| ChevError::ParseError(String::from(s));
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| err("missing header"))?;
        let parts: Vec<&str> = header.trim().split(':').collect();
        if parts.len() != 4 {
            return Err(err("header must be kind:m:k:poly"));
        }
        let kind = MatrixKind::from_tag(parts[0]).ok_or_else(|| err("unknown kind"))?;
        let m: usize = parts[1].parse().map_err(|_| err("bad matrix size"))?;
        let k: usize = parts[2].parse().map_err(|_| err("bad field degree"))?;
        let poly: u32 = parts[3].parse().map_err(|_| err("bad polynomial"))?;
        let field = GfField::with_poly(k, poly).map_err(|_| err("bad field"))?;
        let nparam = match kind {
            MatrixKind::GL | MatrixKind::SL => m,
            _ => {
                if m % 2 != 0 {
                    return Err(err("odd size for a paired form"));
                }
                m / 2
            }
        };
        let spec = GroupSpec::new(kind, nparam, field)?;
        let hex: String = lines.collect::<Vec<_>>().join("");
        let hex = hex.trim();
        let plane_bytes = (m * m + 7) / 8;
        if hex.len() != 2 * plane_bytes * k {
            return Err(err("hex payload has the wrong length"));
        }
        let mut bytes = Vec::with_capacity(plane_bytes * k);
        let hb = hex.as_bytes();
        for i in 0..hex.len() / 2 {
            let hi = (hb[2 * i] as char).to_digit(16).ok_or_else(|| err("bad hex"))?;
            let lo = (hb[2 * i + 1] as char).to_digit(16).ok_or_else(|| err("bad hex"))?;
            bytes.push((hi * 16 + lo) as u8);
        }
        let mut g = GfMat::zero(m);
        for plane in 0..k {
            let base = plane * plane_bytes;
            for idx in 0..m * m {
                let bit = (bytes[base + idx / 8] >> (idx % 8)) & 1;
                if bit != 0 {
                    let old = g.get(idx / m, idx % m);
                    g.set(idx / m, idx % m, old | (1 << plane));
                }
            }
        }
        Ok((spec, g))
    }
}
