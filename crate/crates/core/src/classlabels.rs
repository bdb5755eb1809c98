//! The (λ, ε) parametrization of unipotent conjugacy classes of Sp(2n) and
//! O(2n)/SO(2n) in characteristic 2, plus the classification lists.
//!
//! A label is a partition λ of 2n with c(i) even for every odd i, together
//! with ε: ℕ → {ω, 0, 1} subject to
//!
//!   b1) ε(i) = ω if i is odd, or if i ≥ 1 and c(i) = 0;
//!   b2) ε(i) = 1 if i is even and c(i) is odd (i ≠ 0);
//!   b3) ε(i) ≠ ω if i is even and c(i) ≠ 0 (i ≠ 0);
//!   b4) ε(0) = 1 for Sp, ε(0) = 0 for O/SO.
//!
//! GL labels are bare partitions. The ε values for even i ≥ 2 with c(i) ≠ 0
//! are the only free data and are the only entries stored.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::rootcore::Series;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelError {
    NotWeaklyDecreasing,
    WrongSum { expected: u32, got: u32 },
    OddMultiplicity { part: u32 },
    EpsilonForcedOne { part: u32 },
    EpsilonSpurious { part: u32 },
    EpsilonMissing { part: u32 },
    NotInSpecialOrthogonal,
    BadSplitTag,
    MixedLabels,
    UnequalSums,
    BadCharacteristic { series: Series, rank: usize, p: u32 },
    RankTooSmall { needed: usize },
    UnsupportedKind,
    ParseError(String),
}

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LabelError::NotWeaklyDecreasing => write!(f, "parts must be weakly decreasing"),
            LabelError::WrongSum { expected, got } => {
                write!(f, "partition sums to {got}, group needs {expected}")
            }
            LabelError::OddMultiplicity { part } => {
                write!(f, "odd part {part} has odd multiplicity")
            }
            LabelError::EpsilonForcedOne { part } => {
                write!(f, "even part {part} with odd multiplicity forces epsilon 1")
            }
            LabelError::EpsilonSpurious { part } => {
                write!(f, "epsilon assigned to part {part} where it must be omega")
            }
            LabelError::EpsilonMissing { part } => {
                write!(f, "even part {part} needs an epsilon value")
            }
            LabelError::NotInSpecialOrthogonal => {
                write!(f, "class lies in O(2n) outside SO(2n): dual first part is odd")
            }
            LabelError::BadSplitTag => write!(f, "split tag set on a non-splitting label"),
            LabelError::MixedLabels => write!(f, "labels belong to different groups"),
            LabelError::UnequalSums => write!(f, "dominance order needs equal partition sums"),
            LabelError::BadCharacteristic { series, rank, p } => {
                write!(f, "characteristic {p} is not in scope for {series}{rank}")
            }
            LabelError::RankTooSmall { needed } => write!(f, "rank must be at least {needed}"),
            LabelError::UnsupportedKind => write!(f, "operation not defined for this group kind"),
            LabelError::ParseError(s) => write!(f, "cannot parse label: {s}"),
        }
    }
}

/// A partition, weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition, LabelError> {
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.iter().any(|&p| p == 0) {
            return Err(LabelError::NotWeaklyDecreasing);
        }
        Ok(Partition { parts })
    }

    /// Builds from part/multiplicity pairs, e.g. [(2, 2), (1, 4)].
    pub fn from_mults(pairs: &[(u32, u32)]) -> Partition {
        let mut parts = Vec::new();
        for &(p, c) in pairs {
            for _ in 0..c {
                parts.push(p);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// c(i): the number of parts equal to i.
    pub fn mult(&self, i: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == i).count() as u32
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The dual (transposed) partition.
    pub fn dual(&self) -> Partition {
        let mut parts = Vec::new();
        let mut i = 1;
        loop {
            let count = self.parts.iter().filter(|&&p| p >= i).count() as u32;
            if count == 0 {
                break;
            }
            parts.push(count);
            i += 1;
        }
        Partition { parts }
    }

    /// Dominance: λ ≤ μ iff all partial sums of λ are ≤ those of μ.
    /// Only defined between partitions of the same number.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool, LabelError> {
        if self.sum() != other.sum() {
            return Err(LabelError::UnequalSums);
        }
        let mut sa = 0u32;
        let mut sb = 0u32;
        for i in 0..self.parts.len().max(other.parts.len()) {
            sa += self.parts.get(i).copied().unwrap_or(0);
            sb += other.parts.get(i).copied().unwrap_or(0);
            if sa > sb {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of n.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let top = remaining.min(max);
            for p in (1..=top).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut c = 1;
            while i + c < self.parts.len() && self.parts[i + c] == p {
                c += 1;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if c == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{c}")?;
            }
            i += c;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// ε values, totally ordered ω < 0 < 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Eps {
    Omega,
    Zero,
    One,
}

impl fmt::Display for Eps {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Eps::Omega => write!(f, "w"),
            Eps::Zero => write!(f, "0"),
            Eps::One => write!(f, "1"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    GL,
    Sp,
    O,
    SO,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::GL => write!(f, "GL"),
            GroupKind::Sp => write!(f, "Sp"),
            GroupKind::O => write!(f, "O"),
            GroupKind::SO => write!(f, "SO"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitTag {
    None,
    I,
    II,
}

/// A unipotent class label: (λ, ε) with the group it belongs to. For GL the
/// ε map is empty. `n_param` is the n of Sp(2n)/O(2n)/SO(2n), or the matrix
/// size for GL.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassLabel {
    pub kind: GroupKind,
    pub n_param: u32,
    pub lambda: Partition,
    epsilon: BTreeMap<u32, Eps>,
    pub so_split_tag: SplitTag,
}

impl ClassLabel {
    /// GL(m) label: a bare partition of m.
    pub fn gl(m: u32, lambda: Partition) -> Result<ClassLabel, LabelError> {
        let l = ClassLabel {
            kind: GroupKind::GL,
            n_param: m,
            lambda,
            epsilon: BTreeMap::new(),
            so_split_tag: SplitTag::None,
        };
        l.validate()?;
        Ok(l)
    }

    /// Sp/O/SO label with explicit ε assignments for the even parts that
    /// occur; everything else is forced by b1–b4.
    pub fn form_group(
        kind: GroupKind,
        n: u32,
        lambda: Partition,
        eps: &[(u32, Eps)],
    ) -> Result<ClassLabel, LabelError> {
        let mut map = BTreeMap::new();
        for &(i, e) in eps {
            map.insert(i, e);
        }
        let l = ClassLabel { kind, n_param: n, lambda, epsilon: map, so_split_tag: SplitTag::None };
        l.validate()?;
        Ok(l)
    }

    pub fn with_split_tag(mut self, tag: SplitTag) -> Result<ClassLabel, LabelError> {
        self.so_split_tag = tag;
        self.validate()?;
        Ok(self)
    }

    /// The label with the split tag stripped (two split classes share it).
    pub fn without_split_tag(&self) -> ClassLabel {
        let mut l = self.clone();
        l.so_split_tag = SplitTag::None;
        l
    }

    /// ε(i), applying the forced values b1 and b4.
    pub fn epsilon(&self, i: u32) -> Eps {
        if i == 0 {
            return match self.kind {
                GroupKind::Sp => Eps::One,
                GroupKind::O | GroupKind::SO => Eps::Zero,
                GroupKind::GL => Eps::Omega,
            };
        }
        if i % 2 == 1 || self.lambda.mult(i) == 0 {
            return Eps::Omega;
        }
        self.epsilon.get(&i).copied().unwrap_or(Eps::Omega)
    }

    /// Checks all label invariants, returning the violated rule on failure.
    pub fn validate(&self) -> Result<(), LabelError> {
        let expected = match self.kind {
            GroupKind::GL => self.n_param,
            _ => 2 * self.n_param,
        };
        if self.lambda.sum() != expected {
            return Err(LabelError::WrongSum { expected, got: self.lambda.sum() });
        }
        if self.kind == GroupKind::GL {
            if !self.epsilon.is_empty() || self.so_split_tag != SplitTag::None {
                return Err(LabelError::BadSplitTag);
            }
            return Ok(());
        }
        // a) odd parts come in pairs
        for &p in self.lambda.parts() {
            if p % 2 == 1 && self.lambda.mult(p) % 2 == 1 {
                return Err(LabelError::OddMultiplicity { part: p });
            }
        }
        // b1/b2/b3 on the stored assignments
        for (&i, &e) in &self.epsilon {
            if i == 0 || i % 2 == 1 || self.lambda.mult(i) == 0 {
                return Err(LabelError::EpsilonSpurious { part: i });
            }
            if self.lambda.mult(i) % 2 == 1 && e != Eps::One {
                return Err(LabelError::EpsilonForcedOne { part: i });
            }
            if e == Eps::Omega {
                return Err(LabelError::EpsilonMissing { part: i });
            }
        }
        let mut p = 2;
        while p <= self.lambda.largest() {
            if self.lambda.mult(p) != 0 && !self.epsilon.contains_key(&p) {
                return Err(LabelError::EpsilonMissing { part: p });
            }
            p += 2;
        }
        if self.kind == GroupKind::SO && self.lambda.dual().largest() % 2 == 1 {
            return Err(LabelError::NotInSpecialOrthogonal);
        }
        if self.so_split_tag != SplitTag::None && !(self.kind == GroupKind::SO && self.splits()) {
            return Err(LabelError::BadSplitTag);
        }
        Ok(())
    }

    /// Whether the O(2n) class with this (λ, ε) splits into two SO(2n)
    /// classes: all parts and multiplicities even and no ε equal to 1.
    pub fn splits(&self) -> bool {
        if self.kind == GroupKind::GL {
            return false;
        }
        let lam = &self.lambda;
        lam.parts().iter().all(|&p| p % 2 == 0)
            && (1..=lam.largest()).all(|i| lam.mult(i) % 2 == 0)
            && (1..=lam.largest()).all(|i| self.epsilon(i) != Eps::One)
    }

    /// Labels of involutions (and of the identity): λ1 ≤ 2.
    pub fn is_involution_label(&self) -> bool {
        (1..=2).contains(&self.lambda.largest())
    }

    /// Canonical text form, e.g. "2^2_0+1^4" (ε subscript on even parts).
    pub fn text(&self) -> String {
        let lam = &self.lambda;
        let mut out = String::new();
        let mut first = true;
        let mut i = 0;
        let parts = lam.parts();
        while i < parts.len() {
            let p = parts[i];
            let mut c = 1;
            while i + c < parts.len() && parts[i + c] == p {
                c += 1;
            }
            if !first {
                out.push('+');
            }
            first = false;
            if c == 1 {
                out.push_str(&format!("{p}"));
            } else {
                out.push_str(&format!("{p}^{c}"));
            }
            if self.kind != GroupKind::GL && p % 2 == 0 {
                out.push_str(&format!("_{}", self.epsilon(p)));
            }
            i += c;
        }
        if first {
            out.push('0');
        }
        match self.so_split_tag {
            SplitTag::None => {}
            SplitTag::I => out.push_str("(I)"),
            SplitTag::II => out.push_str("(II)"),
        }
        out
    }

    /// Parses the canonical text form back into a label.
    pub fn parse(kind: GroupKind, n: u32, text: &str) -> Result<ClassLabel, LabelError> {
        let err = |s: &str| LabelError::ParseError(String::from(s));
        let mut body = text.trim();
        let mut tag = SplitTag::None;
        if let Some(stripped) = body.strip_suffix("(I)") {
            tag = SplitTag::I;
            body = stripped;
        } else if let Some(stripped) = body.strip_suffix("(II)") {
            tag = SplitTag::II;
            body = stripped;
        }
        let mut mults: Vec<(u32, u32)> = Vec::new();
        let mut eps: Vec<(u32, Eps)> = Vec::new();
        for group in body.split('+') {
            let mut rest = group.trim();
            if rest.is_empty() {
                return Err(err("empty part group"));
            }
            let mut epsval = None;
            if let Some(pos) = rest.find('_') {
                let e = &rest[pos + 1..];
                epsval = Some(match e {
                    "0" => Eps::Zero,
                    "1" => Eps::One,
                    "w" => Eps::Omega,
                    _ => return Err(err("bad epsilon subscript")),
                });
                rest = &rest[..pos];
            }
            let (pstr, cstr) = match rest.find('^') {
                Some(pos) => (&rest[..pos], Some(&rest[pos + 1..])),
                None => (rest, None),
            };
            let p: u32 = pstr.parse().map_err(|_| err("bad part"))?;
            let c: u32 = match cstr {
                Some(s) => s.parse().map_err(|_| err("bad multiplicity"))?,
                None => 1,
            };
            if p == 0 {
                return Err(err("zero part"));
            }
            mults.push((p, c));
            if let Some(e) = epsval {
                if e != Eps::Omega {
                    eps.push((p, e));
                }
            }
        }
        let lambda = Partition::from_mults(&mults);
        let label = if kind == GroupKind::GL {
            ClassLabel::gl(n, lambda)?
        } else {
            ClassLabel::form_group(kind, n, lambda, &eps)?
        };
        if tag != SplitTag::None {
            label.with_split_tag(tag)
        } else {
            Ok(label)
        }
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.text())
    }
}

/// Partial order on labels: dominance on λ, refined on equal λ by pointwise
/// ε comparison (ω < 0 < 1). This refines the closure order far enough for
/// the minimality arguments in scope; the full order is not reproduced here.
pub fn label_leq(a: &ClassLabel, b: &ClassLabel) -> Result<bool, LabelError> {
    if a.kind != b.kind || a.n_param != b.n_param {
        return Err(LabelError::MixedLabels);
    }
    if !a.lambda.dominance_leq(&b.lambda)? {
        return Ok(false);
    }
    if a.lambda != b.lambda {
        return Ok(true);
    }
    let top = a.lambda.largest();
    for i in 1..=top {
        if a.epsilon(i) > b.epsilon(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A class from the classification tables: a symbolic name, its label when a
/// classical (λ, ε) parametrization exists, its dimension and flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedClass {
    pub name: String,
    pub label: Option<ClassLabel>,
    pub dim: u32,
    pub is_spherical: bool,
    pub consists_of_involutions: bool,
}

/// Every valid (λ, ε) label of the given group: each admissible partition of
/// the underlying space combined with every admissible ε assignment.
pub fn enumerate_labels(kind: GroupKind, n: u32) -> Vec<ClassLabel> {
    let total = match kind {
        GroupKind::GL => n,
        _ => 2 * n,
    };
    let mut out = Vec::new();
    for lambda in Partition::all_of(total) {
        if kind == GroupKind::GL {
            out.push(ClassLabel::gl(n, lambda).unwrap());
            continue;
        }
        if lambda.parts().iter().any(|&p| p % 2 == 1 && lambda.mult(p) % 2 == 1) {
            continue;
        }
        if kind == GroupKind::SO && lambda.dual().largest() % 2 == 1 {
            continue;
        }
        // free ε slots: even parts with even multiplicity; forced slots get 1
        let mut slots: Vec<u32> = Vec::new();
        let mut forced: Vec<(u32, Eps)> = Vec::new();
        let mut p = 2;
        while p <= lambda.largest() {
            if lambda.mult(p) != 0 {
                if lambda.mult(p) % 2 == 1 {
                    forced.push((p, Eps::One));
                } else {
                    slots.push(p);
                }
            }
            p += 2;
        }
        for choice in 0..(1u32 << slots.len()) {
            let mut eps = forced.clone();
            for (bit, &slot) in slots.iter().enumerate() {
                let e = if choice >> bit & 1 == 1 { Eps::One } else { Eps::Zero };
                eps.push((slot, e));
            }
            out.push(ClassLabel::form_group(kind, n, lambda.clone(), &eps).unwrap());
        }
    }
    out.sort_by_key(|l| l.text());
    out
}

/// The involution classes of Sp(2n) or SO(2n) in characteristic 2, with the
/// dimensions from the classification: Sp(2n) has X_ℓ = 2^ℓ⊕1^{2n−2ℓ} of
/// dimension ℓ(2n−ℓ+1) and Y_{2ℓ} = 2^{2ℓ}_0⊕1^{2n−4ℓ} of dimension 4ℓ(n−ℓ);
/// SO(2n) has Z_ℓ, X_ℓ and (for even n) the split partner X'_m.
pub fn involution_labels(kind: GroupKind, n: u32) -> Result<Vec<NamedClass>, LabelError> {
    let mk = |name: String, label: ClassLabel, dim: u32| NamedClass {
        name,
        label: Some(label),
        dim,
        is_spherical: true,
        consists_of_involutions: true,
    };
    match kind {
        GroupKind::Sp => {
            if n < 1 {
                return Err(LabelError::RankTooSmall { needed: 1 });
            }
            let mut out = Vec::new();
            for l in 1..=n {
                let lam = Partition::from_mults(&[(2, l), (1, 2 * n - 2 * l)]);
                let label = ClassLabel::form_group(kind, n, lam, &[(2, Eps::One)])?;
                out.push(mk(format!("X{l}"), label, l * (2 * n - l + 1)));
            }
            for l in 1..=n / 2 {
                let lam = Partition::from_mults(&[(2, 2 * l), (1, 2 * n - 4 * l)]);
                let label = ClassLabel::form_group(kind, n, lam, &[(2, Eps::Zero)])?;
                out.push(mk(format!("Y{}", 2 * l), label, 4 * l * (n - l)));
            }
            out.sort_by_key(|c| (c.dim, c.name.clone()));
            Ok(out)
        }
        GroupKind::SO => {
            if n < 2 {
                return Err(LabelError::RankTooSmall { needed: 2 });
            }
            let m = n / 2;
            let mut out = Vec::new();
            for l in 1..=m {
                let lam = Partition::from_mults(&[(2, 2 * l), (1, 2 * n - 4 * l)]);
                let z = ClassLabel::form_group(kind, n, lam.clone(), &[(2, Eps::One)])?;
                out.push(mk(format!("Z{l}"), z, 4 * l * (n - l)));
                let x = ClassLabel::form_group(kind, n, lam, &[(2, Eps::Zero)])?;
                let x = if l == m && n % 2 == 0 { x.with_split_tag(SplitTag::I)? } else { x };
                out.push(mk(format!("X{l}"), x, 2 * l * (2 * n - 2 * l - 1)));
            }
            if n % 2 == 0 {
                let lam = Partition::from_mults(&[(2, 2 * m)]);
                let label = ClassLabel::form_group(kind, n, lam, &[(2, Eps::Zero)])?
                    .with_split_tag(SplitTag::II)?;
                out.push(mk(format!("X'{m}"), label, n * (n - 1)));
            }
            out.sort_by_key(|c| (c.dim, c.name.clone()));
            Ok(out)
        }
        _ => Err(LabelError::UnsupportedKind),
    }
}

/// The spherical unipotent classes of the simple group of the given type in
/// the given bad characteristic: the X_ℓ for A_n, exactly the involution
/// classes for C/D (and B via the isogeny with Sp(2n)) at p = 2, and the
/// fixed per-type lists for the exceptional groups.
pub fn spherical_unipotent_classes(
    series: Series,
    rank: usize,
    p: u32,
) -> Result<Vec<NamedClass>, LabelError> {
    let bad = match series {
        Series::A => p == 2, // classified alongside the p = 2 classical cases
        Series::B | Series::C | Series::D => p == 2,
        Series::G | Series::F => p == 2 || p == 3,
        Series::E if rank < 8 => p == 2 || p == 3,
        Series::E => p == 2 || p == 3 || p == 5,
    };
    if !bad {
        return Err(LabelError::BadCharacteristic { series, rank, p });
    }
    let n = rank as u32;
    match series {
        Series::A => {
            let m = (n + 1) / 2;
            let mut out = Vec::new();
            for l in 1..=m {
                let lam = Partition::from_mults(&[(2, l), (1, n + 1 - 2 * l)]);
                out.push(NamedClass {
                    name: format!("X{l}"),
                    label: Some(ClassLabel::gl(n + 1, lam)?),
                    dim: 2 * l * (n + 1 - l),
                    is_spherical: true,
                    consists_of_involutions: true,
                });
            }
            Ok(out)
        }
        Series::C | Series::B => involution_labels(GroupKind::Sp, n),
        Series::D => {
            if rank < 4 {
                return Err(LabelError::RankTooSmall { needed: 4 });
            }
            involution_labels(GroupKind::SO, n)
        }
        Series::G | Series::F | Series::E => {
            let inv = p == 2;
            let list: Vec<(String, u32)> = match (series, rank, p) {
                (Series::G, 2, 2) => vec_of(&[("A1", 6), ("~A1", 8)]),
                (Series::G, 2, _) => vec_of(&[("A1", 6), ("~A1", 6), ("~A1^(3)", 8)]),
                (Series::F, 4, 2) => {
                    vec_of(&[("A1", 16), ("~A1", 16), ("~A1^(2)", 22), ("A1~A1", 28)])
                }
                (Series::F, 4, _) => vec_of(&[("A1", 16), ("~A1", 22), ("A1~A1", 28)]),
                (Series::E, 6, _) => vec_of(&[("A1", 22), ("2A1", 32), ("3A1", 40)]),
                (Series::E, 7, _) => vec_of(&[
                    ("A1", 34),
                    ("2A1", 52),
                    ("(3A1)''", 54),
                    ("(3A1)'", 64),
                    ("4A1", 70),
                ]),
                (Series::E, 8, _) => {
                    vec_of(&[("A1", 58), ("2A1", 92), ("3A1", 112), ("4A1", 128)])
                }
                _ => return Err(LabelError::BadCharacteristic { series, rank, p }),
            };
            Ok(list
                .into_iter()
                .map(|(name, dim)| NamedClass {
                    name,
                    label: None,
                    dim,
                    is_spherical: true,
                    consists_of_involutions: inv,
                })
                .collect())
        }
    }
}

fn vec_of(items: &[(&str, u32)]) -> Vec<(String, u32)> {
    items.iter().map(|&(s, d)| (String::from(s), d)).collect()
}

/// All valid Sp(2n) labels of elements of order exactly 4 (λ1 ∈ {3, 4}) that
/// are minimal in the label order.
pub fn order4_minimal_labels(n: u32) -> Result<Vec<ClassLabel>, LabelError> {
    if n < 2 {
        return Err(LabelError::RankTooSmall { needed: 2 });
    }
    let order4: Vec<ClassLabel> = enumerate_labels(GroupKind::Sp, n)
        .into_iter()
        .filter(|l| l.lambda.largest() == 3 || l.lambda.largest() == 4)
        .collect();
    let mut minimal = Vec::new();
    for a in &order4 {
        let mut is_min = true;
        for b in &order4 {
            if b != a && label_leq(b, a)? {
                is_min = false;
                break;
            }
        }
        if is_min {
            minimal.push(a.clone());
        }
    }
    Ok(minimal)
}

/// The classes of involutions in O(2n)∖SO(2n): partitions 2^k⊕1^{2n−2k} for
/// odd k, of dimension k(2n−k).
pub fn outer_involution_labels(n: u32) -> Result<Vec<NamedClass>, LabelError> {
    if n < 4 {
        return Err(LabelError::RankTooSmall { needed: 4 });
    }
    let mut out = Vec::new();
    let mut k = 1;
    while k <= n {
        let lam = Partition::from_mults(&[(2, k), (1, 2 * n - 2 * k)]);
        let label = ClassLabel::form_group(GroupKind::O, n, lam, &[(2, Eps::One)])?;
        out.push(NamedClass {
            name: format!("O{k}"),
            label: Some(label),
            dim: k * (2 * n - k),
            is_spherical: true,
            consists_of_involutions: true,
        });
        k += 2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn sp_label(n: u32, mults: &[(u32, u32)], eps: &[(u32, Eps)]) -> Result<ClassLabel, LabelError> {
        ClassLabel::form_group(GroupKind::Sp, n, Partition::from_mults(mults), eps)
    }

    #[test]
    fn validate_examples() {
        // Y2 in Sp(4): 2^2 with ε(2) = 0 is valid
        assert!(sp_label(2, &[(2, 2)], &[(2, Eps::Zero)]).is_ok());
        // (3,1) violates a)
        assert_eq!(
            sp_label(2, &[(3, 1), (1, 1)], &[]),
            Err(LabelError::OddMultiplicity { part: 3 })
        );
        // (2,1,1) with ε(2)=0 violates b2
        assert_eq!(
            sp_label(2, &[(2, 1), (1, 2)], &[(2, Eps::Zero)]),
            Err(LabelError::EpsilonForcedOne { part: 2 })
        );
        // missing ε on an even part
        assert_eq!(sp_label(2, &[(2, 2)], &[]), Err(LabelError::EpsilonMissing { part: 2 }));
        // wrong total
        assert!(matches!(
            sp_label(3, &[(2, 2)], &[(2, Eps::Zero)]),
            Err(LabelError::WrongSum { expected: 6, got: 4 })
        ));
        // SO needs an even number of parts
        assert_eq!(
            ClassLabel::form_group(
                GroupKind::SO,
                2,
                Partition::from_mults(&[(2, 1), (1, 2)]),
                &[(2, Eps::One)]
            ),
            Err(LabelError::NotInSpecialOrthogonal)
        );
    }

    #[test]
    fn dual_partition() {
        let p = Partition::from_mults(&[(2, 2)]);
        assert_eq!(p.dual(), p);
        let p = Partition::from_mults(&[(3, 2)]);
        assert_eq!(p.dual(), Partition::from_mults(&[(2, 3)]));
        // 2^k ⊕ 1^{2n−2k} has dual first part 2n − k
        for n in 2..=6u32 {
            for k in 1..=n {
                let p = Partition::from_mults(&[(2, k), (1, 2 * n - 2 * k)]);
                assert_eq!(p.dual().largest(), 2 * n - k);
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a = Partition::from_mults(&[(2, 2)]);
        let b = Partition::from_mults(&[(4, 1)]);
        assert!(a.dominance_leq(&a).unwrap());
        assert!(a.dominance_leq(&b).unwrap());
        assert!(!b.dominance_leq(&a).unwrap());
        // (3,3) vs (4,1,1): incomparable
        let c = Partition::from_mults(&[(3, 2)]);
        let d = Partition::from_mults(&[(4, 1), (1, 2)]);
        assert!(!c.dominance_leq(&d).unwrap());
        assert!(!d.dominance_leq(&c).unwrap());
        // unequal sums rejected
        assert_eq!(
            a.dominance_leq(&Partition::from_mults(&[(5, 1)])),
            Err(LabelError::UnequalSums)
        );
    }

    #[test]
    fn label_order_examples() {
        let y2 = sp_label(2, &[(2, 2)], &[(2, Eps::Zero)]).unwrap();
        let x2 = sp_label(2, &[(2, 2)], &[(2, Eps::One)]).unwrap();
        let x1 = sp_label(2, &[(2, 1), (1, 2)], &[(2, Eps::One)]).unwrap();
        assert!(label_leq(&y2, &x2).unwrap());
        assert!(!label_leq(&x2, &y2).unwrap());
        assert!(label_leq(&x1, &x2).unwrap());
        assert!(label_leq(&x1, &y2).unwrap());
        let gl = ClassLabel::gl(4, Partition::from_mults(&[(2, 2)])).unwrap();
        assert_eq!(label_leq(&gl, &x2), Err(LabelError::MixedLabels));
    }

    #[test]
    fn label_order_is_partial_order() {
        for n in 2..=3u32 {
            let labels = enumerate_labels(GroupKind::Sp, n);
            for a in &labels {
                assert!(label_leq(a, a).unwrap());
                for b in &labels {
                    let ab = label_leq(a, b).unwrap();
                    let ba = label_leq(b, a).unwrap();
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    for c in &labels {
                        if ab && label_leq(b, c).unwrap() {
                            assert!(label_leq(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn even_two_multiplicity_rule() {
        // valid Sp(2n) labels with λ = 2^ℓ⊕1^{2n−2ℓ}: one for odd ℓ, two for even ℓ
        let n = 4u32;
        for l in 1..=n {
            let count = enumerate_labels(GroupKind::Sp, n)
                .into_iter()
                .filter(|lab| lab.lambda == Partition::from_mults(&[(2, l), (1, 2 * n - 2 * l)]))
                .count();
            assert_eq!(count, if l % 2 == 1 { 1 } else { 2 }, "l={l}");
        }
    }

    #[test]
    fn involution_tables_sp() {
        let classes = involution_labels(GroupKind::Sp, 2).unwrap();
        let by_name: Vec<(&str, u32)> = classes.iter().map(|c| (c.name.as_str(), c.dim)).collect();
        assert_eq!(by_name, vec![("X1", 4), ("Y2", 4), ("X2", 6)]);
        let classes = involution_labels(GroupKind::Sp, 3).unwrap();
        let dims: Vec<(String, u32)> = classes.iter().map(|c| (c.name.clone(), c.dim)).collect();
        assert_eq!(
            dims,
            vec![
                ("X1".to_string(), 6),
                ("Y2".to_string(), 8),
                ("X2".to_string(), 10),
                ("X3".to_string(), 12)
            ]
        );
    }

    #[test]
    fn involution_tables_so() {
        let classes = involution_labels(GroupKind::SO, 4).unwrap();
        let xp = classes.iter().find(|c| c.name == "X'2").unwrap();
        assert_eq!(xp.dim, 12);
        assert_eq!(xp.label.as_ref().unwrap().so_split_tag, SplitTag::II);
        // at odd n there is no split partner
        let classes = involution_labels(GroupKind::SO, 5).unwrap();
        assert!(classes.iter().all(|c| !c.name.starts_with("X'")));
        assert!(classes
            .iter()
            .all(|c| c.label.as_ref().unwrap().so_split_tag == SplitTag::None));
    }

    #[test]
    fn involution_dims_monotone() {
        for n in 2..=6u32 {
            let classes = involution_labels(GroupKind::Sp, n).unwrap();
            let xs: Vec<u32> = (1..=n)
                .map(|l| classes.iter().find(|c| c.name == format!("X{l}")).unwrap().dim)
                .collect();
            assert!(xs.windows(2).all(|w| w[0] < w[1]));
            let ys: Vec<u32> = (1..=n / 2)
                .map(|l| classes.iter().find(|c| c.name == format!("Y{}", 2 * l)).unwrap().dim)
                .collect();
            assert!(ys.windows(2).all(|w| w[0] < w[1]));
            for l in 1..=n / 2 {
                let y = classes.iter().find(|c| c.name == format!("Y{}", 2 * l)).unwrap();
                let x = classes.iter().find(|c| c.name == format!("X{}", 2 * l)).unwrap();
                assert!(y.dim < x.dim);
            }
        }
    }

    #[test]
    fn spherical_lists() {
        let f4 = spherical_unipotent_classes(Series::F, 4, 2).unwrap();
        assert_eq!(f4.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![16, 16, 22, 28]);
        let e6 = spherical_unipotent_classes(Series::E, 6, 2).unwrap();
        assert_eq!(
            e6.iter().map(|c| (c.name.clone(), c.dim)).collect::<Vec<_>>(),
            vec![
                ("A1".to_string(), 22),
                ("2A1".to_string(), 32),
                ("3A1".to_string(), 40)
            ]
        );
        let g2 = spherical_unipotent_classes(Series::G, 2, 3).unwrap();
        assert_eq!(g2.len(), 3);
        assert!(!g2.last().unwrap().consists_of_involutions);
        // scope guard
        assert!(spherical_unipotent_classes(Series::C, 3, 3).is_err());
        assert!(spherical_unipotent_classes(Series::E, 7, 5).is_err());
        assert!(spherical_unipotent_classes(Series::E, 8, 5).is_ok());
        // A series at p = 2: X1, X2 for rank 3
        let a3 = spherical_unipotent_classes(Series::A, 3, 2).unwrap();
        assert_eq!(a3.len(), 2);
        assert_eq!(a3[1].dim, 2 * 2 * (4 - 2));
    }

    #[test]
    fn order4_minimal_examples() {
        let texts = |n: u32| -> Vec<String> {
            order4_minimal_labels(n).unwrap().iter().map(|l| l.text()).collect()
        };
        assert_eq!(texts(2), vec!["4_1".to_string()]);
        let t3 = texts(3);
        assert_eq!(t3.len(), 2);
        assert!(t3.contains(&"3^2".to_string()));
        assert!(t3.contains(&"4_1+1^2".to_string()));
        let t4 = texts(4);
        assert_eq!(t4.len(), 2);
        assert!(t4.contains(&"3^2+1^2".to_string()));
        assert!(t4.contains(&"4_1+1^4".to_string()));
    }

    #[test]
    fn outer_labels() {
        let o4 = outer_involution_labels(4).unwrap();
        assert_eq!(
            o4.iter().map(|c| (c.name.clone(), c.dim)).collect::<Vec<_>>(),
            vec![("O1".to_string(), 7), ("O3".to_string(), 15)]
        );
        let o5 = outer_involution_labels(5).unwrap();
        assert_eq!(o5.iter().map(|c| c.dim).collect::<Vec<_>>(), vec![9, 21, 25]);
        assert!(outer_involution_labels(3).is_err());
    }

    #[test]
    fn text_roundtrip() {
        let cases = [
            (GroupKind::Sp, 4, "2^2_0+1^4"),
            (GroupKind::Sp, 3, "4_1+1^2"),
            (GroupKind::Sp, 3, "3^2"),
            (GroupKind::Sp, 3, "6_1"),
            (GroupKind::SO, 4, "2^4_0(II)"),
            (GroupKind::GL, 5, "3+2"),
            (GroupKind::GL, 5, "2^2+1"),
        ];
        for (kind, n, text) in cases {
            let label =
                ClassLabel::parse(kind, n, text).unwrap_or_else(|e| panic!("parse {text}: {e}"));
            assert_eq!(label.text(), text);
        }
        // wrong sums and bad subscripts fail to parse
        assert!(ClassLabel::parse(GroupKind::Sp, 2, "2^2_0+1^4").is_err());
        assert!(ClassLabel::parse(GroupKind::Sp, 2, "2^2_x").is_err());
        // every enumerated label round-trips
        for kind in [GroupKind::Sp, GroupKind::SO] {
            for n in 2..=4u32 {
                for label in enumerate_labels(kind, n) {
                    let back = ClassLabel::parse(kind, n, &label.text()).unwrap();
                    assert_eq!(back, label);
                }
            }
        }
    }

    #[test]
    fn split_rule() {
        // X_m splits iff n even: 2^{2m} at n = 2m
        let at4 = ClassLabel::form_group(
            GroupKind::SO,
            4,
            Partition::from_mults(&[(2, 4)]),
            &[(2, Eps::Zero)],
        )
        .unwrap();
        assert!(at4.splits());
        // with 1-parts present (odd part size) it does not split
        let at5 = ClassLabel::form_group(
            GroupKind::SO,
            5,
            Partition::from_mults(&[(2, 4), (1, 2)]),
            &[(2, Eps::Zero)],
        )
        .unwrap();
        assert!(!at5.splits());
        // ε = 1 blocks splitting
        let z = ClassLabel::form_group(
            GroupKind::SO,
            4,
            Partition::from_mults(&[(2, 4)]),
            &[(2, Eps::One)],
        )
        .unwrap();
        assert!(!z.splits());
        assert!(z.with_split_tag(SplitTag::I).is_err());
    }
}
