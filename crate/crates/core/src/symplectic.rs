//! Exact integer model of the first homology of a closed oriented genus-`g`
//! surface with its algebraic intersection pairing.
//!
//! Classes are integer vectors over the symplectic basis
//! `a1, b1, a2, b2, …, ag, bg` (so a class has `2g` coordinates). The pairing
//! of `x` and `y` is `xᵀ J y` where `J` is block diagonal with `g` blocks
//! `[[0, 1], [-1, 0]]`. A positive Dehn twist along a curve with class `δ`
//! acts as the transvection `x ↦ x + ⟨x, δ⟩ δ`.
//!
//! Composition convention, fixed here and used everywhere in this crate:
//! `f ∘ g` means "apply `g` first"; a word written left to right denotes the
//! composition of its letters with the **rightmost letter acting first**, and
//! its matrix is the ordinary left-to-right matrix product acting on column
//! vectors.
//!
//! All coordinates are arbitrary-precision integers. Entries of products of
//! transvections grow multiplicatively with word length, so fixed-width
//! arithmetic would have to either wrap or abort; big integers keep every
//! result exact.

// Index loops mirror the matrix formulas they implement.
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact integer scalar used throughout the crate.
pub type Int = BigInt;

fn int(v: i64) -> Int {
    Int::from(v)
}

/// The homology class of an oriented closed curve: an integer vector of
/// length `2g` over the basis `a1, b1, …, ag, bg`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomologyClass {
    coords: Vec<Int>,
}

impl HomologyClass {
    /// Builds a class from its coordinates. The length must be even and
    /// nonzero (it equals `2g`).
    pub fn new(coords: Vec<Int>) -> Result<Self> {
        if coords.is_empty() || coords.len() % 2 != 0 {
            return Err(Error::Dimension(format!(
                "homology class needs 2g coordinates, got {}",
                coords.len()
            )));
        }
        Ok(HomologyClass { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| int(c)).collect())
    }

    /// The zero class over genus `g`.
    pub fn zero(genus: usize) -> Self {
        HomologyClass {
            coords: vec![Int::zero(); 2 * genus],
        }
    }

    pub fn genus(&self) -> usize {
        self.coords.len() / 2
    }

    /// Ambient dimension `2g`.
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Orientation flip. An involution: `-(-x) = x`.
    pub fn negated(&self) -> Self {
        HomologyClass {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    /// The representative of `{x, -x}` whose first nonzero coordinate is
    /// positive. The zero class is its own representative.
    pub fn sign_normalized(&self) -> Self {
        match self.coords.iter().find(|c| !c.is_zero()) {
            Some(c) if c.is_negative() => self.negated(),
            _ => self.clone(),
        }
    }

    fn check_same_genus(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::GenusMismatch(self.genus(), other.genus()));
        }
        Ok(())
    }
}

impl std::fmt::Debug for HomologyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// The standard symplectic form on `H1` of a genus-`g` surface: the matrix
/// `J`, block diagonal with blocks `[[0, 1], [-1, 0]]`. Satisfies `J² = -I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    pub genus: usize,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::Domain("genus must be positive".into()));
        }
        Ok(SymplecticForm { genus })
    }

    /// `J` as a dense `2g × 2g` matrix.
    pub fn matrix(&self) -> Vec<Vec<Int>> {
        let n = 2 * self.genus;
        let mut m = vec![vec![Int::zero(); n]; n];
        for b in 0..self.genus {
            m[2 * b][2 * b + 1] = Int::one();
            m[2 * b + 1][2 * b] = -Int::one();
        }
        m
    }
}

/// `J v` without materialising `J`: `(Jv)[2i] = v[2i+1]`, `(Jv)[2i+1] = -v[2i]`.
fn j_apply(v: &[Int]) -> Vec<Int> {
    let mut out = Vec::with_capacity(v.len());
    for pair in v.chunks_exact(2) {
        out.push(pair[1].clone());
        out.push(-&pair[0]);
    }
    out
}

/// Algebraic intersection number `⟨x, y⟩ = xᵀ J y`.
///
/// Antisymmetric and bilinear over the integers; `⟨x, x⟩ = 0`.
pub fn intersection_pairing(x: &HomologyClass, y: &HomologyClass) -> Result<Int> {
    x.check_same_genus(y)?;
    let mut acc = Int::zero();
    for (xp, yp) in x.coords.chunks_exact(2).zip(y.coords.chunks_exact(2)) {
        acc += &xp[0] * &yp[1] - &xp[1] * &yp[0];
    }
    Ok(acc)
}

/// Homology classes `c1 … c_{2g+1}` of a chain of curves: consecutive classes
/// pair to `±1`, all other pairs to `0`.
///
/// Realization: `c_{2i} = b_i` and `c_{2i+1} = a_i + a_{i+1}` (indices
/// clamped to the basis), which for `g = 2` gives
/// `a1, b1, a1 + a2, b2, a2`.
pub fn chain_classes(genus: usize) -> Result<Vec<HomologyClass>> {
    if genus == 0 {
        return Err(Error::Domain("genus must be positive".into()));
    }
    let dim = 2 * genus;
    let mut out = Vec::with_capacity(2 * genus + 1);
    for idx in 1..=(2 * genus + 1) {
        let mut coords = vec![Int::zero(); dim];
        if idx % 2 == 0 {
            // c_{2i} = b_i
            let i = idx / 2;
            coords[2 * (i - 1) + 1] = Int::one();
        } else {
            // c_{2i+1} = a_i + a_{i+1}
            let i = (idx - 1) / 2;
            if i >= 1 {
                coords[2 * (i - 1)] = Int::one();
            }
            if i < genus {
                coords[2 * i] = Int::one();
            }
        }
        out.push(HomologyClass { coords });
    }
    Ok(out)
}

/// Image of `x` under the positive Dehn twist along `δ`:
/// `T_δ(x) = x + ⟨x, δ⟩ δ`. Orientation-blind in `δ`.
pub fn twist_apply(delta: &HomologyClass, x: &HomologyClass) -> Result<HomologyClass> {
    twist_apply_pow(delta, 1, x)
}

/// Image of `x` under the `k`-th power of the twist along `δ`:
/// `x + k ⟨x, δ⟩ δ`. Negative `k` gives inverse twists.
pub fn twist_apply_pow(delta: &HomologyClass, k: i64, x: &HomologyClass) -> Result<HomologyClass> {
    let pairing = intersection_pairing(x, delta)?;
    let factor = pairing * int(k);
    let coords = x
        .coords
        .iter()
        .zip(delta.coords.iter())
        .map(|(xc, dc)| xc + &factor * dc)
        .collect();
    Ok(HomologyClass { coords })
}

/// A `2g × 2g` integer matrix preserving the symplectic form: `Mᵀ J M = J`.
/// Represents the action of a mapping class on homology; acts on column
/// vectors from the left.
#[derive(Clone, PartialEq, Eq)]
pub struct SymplecticMatrix {
    dim: usize,
    // row-major
    entries: Vec<Int>,
}

impl SymplecticMatrix {
    /// Builds a matrix from rows, verifying `Mᵀ J M = J` exactly.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || dim % 2 != 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Dimension(format!(
                "expected a square 2g x 2g matrix, got {} rows",
                dim
            )));
        }
        let m = SymplecticMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        if !m.is_symplectic() {
            return Err(Error::Invariant(
                "matrix does not preserve the symplectic form".into(),
            ));
        }
        Ok(m)
    }

    pub fn identity(genus: usize) -> Self {
        let dim = 2 * genus;
        let mut m = SymplecticMatrix {
            dim,
            entries: vec![Int::zero(); dim * dim],
        };
        for i in 0..dim {
            *m.at_mut(i, i) = Int::one();
        }
        m
    }

    pub fn genus(&self) -> usize {
        self.dim / 2
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> &Int {
        &self.entries[row * self.dim + col]
    }

    fn at_mut(&mut self, row: usize, col: usize) -> &mut Int {
        &mut self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, e)| {
            let (i, j) = (k / self.dim, k % self.dim);
            if i == j {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// True iff `M = -I`.
    pub fn is_neg_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, e)| {
            let (i, j) = (k / self.dim, k % self.dim);
            if i == j {
                (-e).is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// Checks `Mᵀ J M = J` exactly.
    pub fn is_symplectic(&self) -> bool {
        for i in 0..self.dim {
            let col_i: Vec<Int> = (0..self.dim).map(|r| self.at(r, i).clone()).collect();
            let jci = j_apply(&col_i);
            for j in 0..self.dim {
                // acc = col_jᵀ J col_i = (MᵀJM)[j][i], must equal J[j][i].
                let mut acc = Int::zero();
                for r in 0..self.dim {
                    acc += self.at(r, j) * &jci[r];
                }
                if acc != j_entry(j, i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn mul(&self, rhs: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        let dim = self.dim;
        let mut out = SymplecticMatrix {
            dim,
            entries: vec![Int::zero(); dim * dim],
        };
        for i in 0..dim {
            for k in 0..dim {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..dim {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// Exact inverse via the symplectic identity `M⁻¹ = -J Mᵀ J`.
    pub fn inverse(&self) -> SymplecticMatrix {
        let dim = self.dim;
        let mut out = SymplecticMatrix {
            dim,
            entries: vec![Int::zero(); dim * dim],
        };
        for i in 0..dim {
            for j in 0..dim {
                // (-J Mᵀ J)[i][j] = -Σ_{r,s} J[i][r] M[s][r] J[s][j]
                let mut acc = Int::zero();
                for r in 0..dim {
                    let jir = j_entry(i, r);
                    if jir.is_zero() {
                        continue;
                    }
                    for s in 0..dim {
                        let jsj = j_entry(s, j);
                        if !jsj.is_zero() {
                            acc += &jir * self.at(s, r) * &jsj;
                        }
                    }
                }
                *out.at_mut(i, j) = -acc;
            }
        }
        debug_assert!(out.mul(self).is_identity());
        out
    }

    pub fn pow(&self, k: u32) -> SymplecticMatrix {
        let mut acc = SymplecticMatrix::identity(self.genus());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the matrix to a class.
    pub fn apply(&self, x: &HomologyClass) -> Result<HomologyClass> {
        if x.dim() != self.dim {
            return Err(Error::GenusMismatch(self.genus(), x.genus()));
        }
        let coords = (0..self.dim)
            .map(|i| {
                let mut acc = Int::zero();
                for j in 0..self.dim {
                    let e = self.at(i, j);
                    if !e.is_zero() {
                        acc += e * &x.coords[j];
                    }
                }
                acc
            })
            .collect();
        Ok(HomologyClass { coords })
    }

    pub fn rows(&self) -> Vec<Vec<Int>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }
}

fn j_entry(i: usize, j: usize) -> Int {
    if i % 2 == 0 && j == i + 1 {
        Int::one()
    } else if i % 2 == 1 && j + 1 == i {
        -Int::one()
    } else {
        Int::zero()
    }
}

impl std::fmt::Debug for SymplecticMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.dim {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        Ok(())
    }
}

/// Matrix of the `k`-th power of the twist along `delta`:
/// `M x = x + k ⟨x, δ⟩ δ`, i.e. `M = I + k · δ (Jδ)ᵀ`.
pub fn transvection_matrix(delta: &HomologyClass, exponent: i64) -> SymplecticMatrix {
    let dim = delta.dim();
    let jd = j_apply(&delta.coords);
    let k = int(exponent);
    let mut m = SymplecticMatrix::identity(delta.genus());
    for i in 0..dim {
        if delta.coords[i].is_zero() {
            continue;
        }
        let di_k = &delta.coords[i] * &k;
        for j in 0..dim {
            if !jd[j].is_zero() {
                // (Jδ)ᵀ x = ⟨x, δ⟩, so column j carries (Jδ)[j].
                *m.at_mut(i, j) += &di_k * &jd[j];
            }
        }
    }
    debug_assert!(m.is_symplectic());
    m
}

/// One letter of a twist word: a generator class and a nonzero exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistLetter {
    pub class: HomologyClass,
    pub exponent: i64,
}

/// A word in Dehn twists, e.g. `T_{γ2}⁻¹ ∘ T_{γ1} ∘ T_{γ2}`. Letters are
/// stored left to right; the rightmost letter acts first (see module docs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistWord {
    genus: usize,
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn empty(genus: usize) -> Self {
        TwistWord {
            genus,
            letters: Vec::new(),
        }
    }

    pub fn new(genus: usize, letters: Vec<TwistLetter>) -> Result<Self> {
        for l in &letters {
            if l.class.genus() != genus {
                return Err(Error::GenusMismatch(genus, l.class.genus()));
            }
            if l.exponent == 0 {
                return Err(Error::Domain("twist exponent must be nonzero".into()));
            }
        }
        Ok(TwistWord { genus, letters })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `w · other` (concatenation; `other` acts first).
    pub fn concat(&self, other: &TwistWord) -> Result<TwistWord> {
        if self.genus != other.genus {
            return Err(Error::GenusMismatch(self.genus, other.genus));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Ok(TwistWord {
            genus: self.genus,
            letters,
        })
    }

    /// The formal inverse: letters reversed, exponents negated.
    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            genus: self.genus,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter {
                    class: l.class.clone(),
                    exponent: -l.exponent,
                })
                .collect(),
        }
    }
}

/// Evaluates a word to its matrix on homology: the left-to-right product of
/// the letters' transvection matrices. The empty word evaluates to `I`.
pub fn evaluate_word(word: &TwistWord) -> SymplecticMatrix {
    let mut acc = SymplecticMatrix::identity(word.genus);
    for letter in &word.letters {
        acc = acc.mul(&transvection_matrix(&letter.class, letter.exponent));
    }
    acc
}

/// Class of the path obtained by surgery of `x` along `y` (`x △ y`), defined
/// when the curves meet exactly once: `[x △ y] = x - ⟨x, y⟩ y`. At the
/// mapping-class level the twist along `x △ y` is `T_y⁻¹ ∘ T_x ∘ T_y`.
pub fn triangle_class(x: &HomologyClass, y: &HomologyClass) -> Result<HomologyClass> {
    let p = intersection_pairing(x, y)?;
    if p.abs() != Int::one() {
        return Err(Error::Precondition(format!(
            "triangle operator needs |<x,y>| = 1, got {p}"
        )));
    }
    twist_apply_pow(y, -1, x)
}

/// Recovers `s` (up to sign) from `M = transvection_matrix(s, power)`.
///
/// Returns the zero class when `M = I` (the trivial twist, e.g. a twist
/// along a separating curve), the sign-normalized class `s` when `M` is
/// exactly the `power`-th transvection power along `s`, and `None` when `M`
/// is not such a power. The normalization makes the first nonzero coordinate
/// positive.
pub fn derive_twist_class(m: &SymplecticMatrix, power: u32) -> Option<HomologyClass> {
    assert!(power > 0, "power must be positive");
    let dim = m.dim();
    let genus = m.genus();
    if m.is_identity() {
        return Some(HomologyClass::zero(genus));
    }

    // M - I must have rank one with image spanned by s.
    let mut primitive: Option<Vec<Int>> = None;
    let mut col_multiples = vec![Int::zero(); dim];
    for j in 0..dim {
        let col: Vec<Int> = (0..dim)
            .map(|i| {
                let mut e = m.at(i, j).clone();
                if i == j {
                    e -= Int::one();
                }
                e
            })
            .collect();
        if col.iter().all(Zero::is_zero) {
            continue;
        }
        let v = match &primitive {
            None => {
                let content = vec_content(&col);
                let v: Vec<Int> = col.iter().map(|c| c / &content).collect();
                primitive = Some(v);
                primitive.as_ref().unwrap()
            }
            Some(v) => v,
        };
        // col must be an integral multiple of v
        let pivot = v.iter().position(|c| !c.is_zero())?;
        if v[pivot].is_zero() {
            return None;
        }
        let (q, r) = num_integer_div_rem(&col[pivot], &v[pivot]);
        if !r.is_zero() {
            return None;
        }
        for i in 0..dim {
            if col[i] != &q * &v[i] {
                return None;
            }
        }
        col_multiples[j] = q;
    }
    let v = primitive?;

    // Column j of M - I equals power · ⟨e_j, s⟩ · s with s = c·v, hence
    // multiple_j = power · c² · (Jv)[j]; solve for c².
    let jv = j_apply(&v);
    let j0 = jv.iter().position(|c| !c.is_zero())?;
    let denom = Int::from(power) * &jv[j0];
    let (c2, r) = num_integer_div_rem(&col_multiples[j0], &denom);
    if !r.is_zero() || !c2.is_positive() {
        return None;
    }
    let c = c2.sqrt();
    if &c * &c != c2 {
        return None;
    }
    let s = HomologyClass {
        coords: v.iter().map(|x| x * &c).collect(),
    };
    // Final exact check: every candidate must reproduce M verbatim.
    if transvection_matrix(&s, power as i64) == *m {
        Some(s.sign_normalized())
    } else {
        None
    }
}

fn vec_content(v: &[Int]) -> Int {
    let mut g = Int::zero();
    for c in v {
        g = gcd(&g, c);
    }
    if g.is_zero() {
        Int::one()
    } else {
        g
    }
}

fn gcd(a: &Int, b: &Int) -> Int {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

fn num_integer_div_rem(a: &Int, b: &Int) -> (Int, Int) {
    (a / b, a % b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(genus: usize, idx: usize) -> HomologyClass {
        chain_classes(genus).unwrap()[idx - 1].clone()
    }

    fn hc(coords: &[i64]) -> HomologyClass {
        HomologyClass::from_i64(coords).unwrap()
    }

    #[test]
    fn pairing_of_chain_neighbours() {
        let x = c(2, 1);
        let y = c(2, 2);
        assert_eq!(intersection_pairing(&x, &y).unwrap(), int(1));
        assert_eq!(intersection_pairing(&y, &x).unwrap(), int(-1));
        assert_eq!(intersection_pairing(&x, &x).unwrap(), int(0));
        assert_eq!(intersection_pairing(&x, &c(2, 3)).unwrap(), int(0));
    }

    #[test]
    fn pairing_rejects_genus_mismatch() {
        let x = hc(&[1, 0]);
        let y = hc(&[1, 0, 0, 0]);
        assert!(matches!(
            intersection_pairing(&x, &y),
            Err(Error::GenusMismatch(..))
        ));
    }

    #[test]
    fn chain_realization_genus_two() {
        let cs = chain_classes(2).unwrap();
        let expected = [
            [1, 0, 0, 0],
            [0, 1, 0, 0],
            [1, 0, 1, 0],
            [0, 0, 0, 1],
            [0, 0, 1, 0],
        ];
        assert_eq!(cs.len(), 5);
        for (cls, exp) in cs.iter().zip(expected.iter()) {
            assert_eq!(cls, &hc(exp));
        }
    }

    #[test]
    fn chain_adjacency_pattern_all_genera() {
        // Brute-force oracle: the full pairing matrix must be ±1 exactly on
        // the super/sub-diagonal and 0 elsewhere.
        for g in 1..=5 {
            let cs = chain_classes(g).unwrap();
            assert_eq!(cs.len(), 2 * g + 1);
            for i in 0..cs.len() {
                for j in 0..cs.len() {
                    let p = intersection_pairing(&cs[i], &cs[j]).unwrap();
                    if i.abs_diff(j) == 1 {
                        assert_eq!(p.abs(), int(1), "g={g} i={i} j={j}");
                    } else {
                        assert!(p.is_zero(), "g={g} i={i} j={j} got {p}");
                    }
                }
            }
        }
    }

    #[test]
    fn chain_rejects_genus_zero() {
        assert!(matches!(chain_classes(0), Err(Error::Domain(_))));
    }

    #[test]
    fn twist_examples() {
        let c1 = c(2, 1);
        let c2 = c(2, 2);
        // ⟨c1, c2⟩ = 1, so T_{c2}(c1) = c1 + c2.
        assert_eq!(twist_apply(&c2, &c1).unwrap(), hc(&[1, 1, 0, 0]));
        // A twist fixes its own class.
        assert_eq!(twist_apply(&c1, &c1).unwrap(), c1);
        // Inverse twist: c1 - ⟨c1, c2⟩ c2.
        assert_eq!(twist_apply_pow(&c2, -1, &c1).unwrap(), hc(&[1, -1, 0, 0]));
        // Orientation-blind in δ.
        assert_eq!(
            twist_apply(&c2.negated(), &c1).unwrap(),
            twist_apply(&c2, &c1).unwrap()
        );
    }

    #[test]
    fn twists_preserve_the_pairing() {
        let cs = chain_classes(2).unwrap();
        let x = hc(&[3, -1, 2, 5]);
        let y = hc(&[-2, 4, 1, -3]);
        for d in &cs {
            let tx = twist_apply(d, &x).unwrap();
            let ty = twist_apply(d, &y).unwrap();
            assert_eq!(
                intersection_pairing(&tx, &ty).unwrap(),
                intersection_pairing(&x, &y).unwrap()
            );
        }
    }

    #[test]
    fn transvection_matrix_examples() {
        let c1 = c(2, 1);
        let c2 = c(2, 2);
        let m = transvection_matrix(&c1, 1);
        // ⟨c2, c1⟩ = -1 so M c2 = c2 - c1.
        assert_eq!(m.apply(&c2).unwrap(), hc(&[-1, 1, 0, 0]));
        assert!(transvection_matrix(&c1, 0).is_identity());
        let inv = transvection_matrix(&c1, -3);
        assert!(transvection_matrix(&c1, 3).mul(&inv).is_identity());
    }

    #[test]
    fn transvection_matches_iterated_twist() {
        let delta = hc(&[2, -1, 0, 3]);
        let x = hc(&[1, 1, -2, 0]);
        for k in -5..=5i64 {
            let m = transvection_matrix(&delta, k);
            assert!(m.is_symplectic());
            let via_matrix = m.apply(&x).unwrap();
            let mut via_twist = x.clone();
            for _ in 0..k.unsigned_abs() {
                via_twist = twist_apply_pow(&delta, k.signum(), &via_twist).unwrap();
            }
            assert_eq!(via_matrix, via_twist, "k={k}");
        }
    }

    #[test]
    fn evaluate_word_empty_is_identity() {
        assert!(evaluate_word(&TwistWord::empty(2)).is_identity());
    }

    #[test]
    fn conjugated_transvection_is_transvection_along_image() {
        // g2⁻¹ g1 g2 is the transvection along T_{g2}⁻¹(c1) = c1 - c2.
        let c1 = c(2, 1);
        let c2 = c(2, 2);
        let word = TwistWord::new(
            2,
            vec![
                TwistLetter { class: c2.clone(), exponent: -1 },
                TwistLetter { class: c1.clone(), exponent: 1 },
                TwistLetter { class: c2.clone(), exponent: 1 },
            ],
        )
        .unwrap();
        let m = evaluate_word(&word);
        assert_eq!(m, transvection_matrix(&hc(&[1, -1, 0, 0]), 1));
    }

    #[test]
    fn commuting_generators() {
        // ⟨c1, c5⟩ = 0, so the two transvections commute.
        let c1 = c(2, 1);
        let c5 = c(2, 5);
        let a = transvection_matrix(&c1, 1);
        let b = transvection_matrix(&c5, 1);
        assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn word_times_inverse_is_identity() {
        let cs = chain_classes(2).unwrap();
        let word = TwistWord::new(
            2,
            vec![
                TwistLetter { class: cs[0].clone(), exponent: 2 },
                TwistLetter { class: cs[1].clone(), exponent: -1 },
                TwistLetter { class: cs[2].clone(), exponent: 3 },
                TwistLetter { class: cs[3].clone(), exponent: -2 },
            ],
        )
        .unwrap();
        let round = word.concat(&word.inverse()).unwrap();
        assert!(evaluate_word(&round).is_identity());
    }

    #[test]
    fn triangle_class_examples() {
        let cs = chain_classes(2).unwrap();
        assert_eq!(
            triangle_class(&cs[0], &cs[1]).unwrap(),
            hc(&[1, -1, 0, 0])
        );
        // ⟨c3, c4⟩ = 1: c3 - c4.
        assert_eq!(
            triangle_class(&cs[2], &cs[3]).unwrap(),
            hc(&[1, 0, 1, -1])
        );
        assert!(matches!(
            triangle_class(&cs[0], &cs[2]),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn derive_twist_class_round_trip() {
        let s = hc(&[0, 1, 0, 1]);
        let m = transvection_matrix(&s, 2);
        let got = derive_twist_class(&m, 2).unwrap();
        assert_eq!(got, s.sign_normalized());
    }

    #[test]
    fn derive_twist_class_identity_is_zero_class() {
        let m = SymplecticMatrix::identity(2);
        assert_eq!(derive_twist_class(&m, 3).unwrap(), HomologyClass::zero(2));
    }

    #[test]
    fn derive_twist_class_rejects_rank_two() {
        let c1 = c(2, 1);
        let c2 = c(2, 2);
        let m = transvection_matrix(&c1, 1).mul(&transvection_matrix(&c2, 1));
        assert_eq!(derive_twist_class(&m, 2), None);
    }

    #[test]
    fn derive_twist_class_rejects_wrong_power() {
        let s = hc(&[1, 0, 1, 0]);
        let m = transvection_matrix(&s, 3);
        assert_eq!(derive_twist_class(&m, 2), None);
    }

    #[test]
    fn symplectic_form_matrix_squares_to_minus_identity() {
        let j = SymplecticForm::new(2).unwrap().matrix();
        let m = |a: &Vec<Vec<Int>>, b: &Vec<Vec<Int>>| -> Vec<Vec<Int>> {
            let n = a.len();
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|k| (0..n).map(|r| &a[i][r] * &b[r][k]).sum())
                        .collect()
                })
                .collect()
        };
        let jj = m(&j, &j);
        for i in 0..4 {
            for k in 0..4 {
                let want = if i == k { int(-1) } else { int(0) };
                assert_eq!(jj[i][k], want);
            }
        }
    }

    #[test]
    fn inverse_is_exact() {
        let cs = chain_classes(2).unwrap();
        let m = transvection_matrix(&cs[0], 1)
            .mul(&transvection_matrix(&cs[1], -2))
            .mul(&transvection_matrix(&cs[2], 1));
        assert!(m.mul(&m.inverse()).is_identity());
        assert!(m.inverse().mul(&m).is_identity());
    }
}
