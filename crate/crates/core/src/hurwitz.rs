//! Tuples of positive Dehn twists and the Hurwitz moves acting on them.
//!
//! A Hurwitz move rewrites two adjacent entries of a tuple while preserving
//! the ordered product of the twists:
//!
//! ```text
//! L_i: (…, δ_i, δ_{i+1}, …) ↦ (…, T_{δ_i}(δ_{i+1}), δ_i, …)
//! R_i: (…, δ_i, δ_{i+1}, …) ↦ (…, δ_{i+1}, T_{δ_{i+1}}⁻¹(δ_i), …)
//! ```
//!
//! The same moves act on the matrix of pairwise algebraic intersections
//! through explicit update rules ([`flat_move`]). The flat action is
//! implemented from those rules directly, not by delegating to the tuple
//! action, so the two levels cross-check each other.
//!
//! Move indices are 1-based throughout, matching the usual `L_1 … L_{l-1}`
//! notation: a move with index `k` acts on positions `k` and `k+1`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::symplectic::{
    chain_classes, intersection_pairing, transvection_matrix, twist_apply, twist_apply_pow,
    HomologyClass, Int, SymplecticMatrix,
};

/// An ordered tuple of homology classes, each standing for the positive Dehn
/// twist along a curve in that class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistTuple {
    genus: usize,
    entries: Vec<HomologyClass>,
}

impl TwistTuple {
    pub fn new(genus: usize, entries: Vec<HomologyClass>) -> Result<Self> {
        for e in &entries {
            if e.genus() != genus {
                return Err(Error::GenusMismatch(genus, e.genus()));
            }
        }
        Ok(TwistTuple { genus, entries })
    }

    pub fn empty(genus: usize) -> Self {
        TwistTuple {
            genus,
            entries: Vec::new(),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[HomologyClass] {
        &self.entries
    }

    /// Returns a copy with entry `pos` (0-based) orientation-flipped.
    pub fn with_negated_entry(&self, pos: usize) -> TwistTuple {
        let mut entries = self.entries.clone();
        entries[pos] = entries[pos].negated();
        TwistTuple {
            genus: self.genus,
            entries,
        }
    }

    /// Applies a whole move sequence; the first out-of-bounds move aborts
    /// with its position in the sequence.
    pub fn apply_moves(&self, moves: &MoveSequence) -> Result<TwistTuple> {
        let mut t = self.clone();
        for (position, mv) in moves.iter().enumerate() {
            t = sharp_move(&t, *mv).map_err(|e| locate(e, position))?;
        }
        Ok(t)
    }
}

/// Which side a Hurwitz move conjugates from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    L,
    R,
}

/// One Hurwitz move: a side and a 1-based index `k` acting on positions
/// `k, k+1` of a tuple of length `l` (so `1 ≤ k ≤ l-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HurwitzMove {
    pub side: Side,
    pub index: usize,
}

impl HurwitzMove {
    pub fn left(index: usize) -> Self {
        HurwitzMove {
            side: Side::L,
            index,
        }
    }

    pub fn right(index: usize) -> Self {
        HurwitzMove {
            side: Side::R,
            index,
        }
    }

    /// The move undoing this one: `R_k` undoes `L_k` and vice versa.
    pub fn inverse(&self) -> Self {
        HurwitzMove {
            side: match self.side {
                Side::L => Side::R,
                Side::R => Side::L,
            },
            index: self.index,
        }
    }

    fn check_bounds(&self, len: usize) -> Result<()> {
        // A move with index k touches positions k and k+1, so 1 ≤ k ≤ l-1.
        if self.index == 0 || self.index >= len {
            return Err(Error::MoveOutOfBounds {
                mv: *self,
                position: 0,
                len,
            });
        }
        Ok(())
    }
}

impl std::fmt::Display for HurwitzMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let side = match self.side {
            Side::L => 'L',
            Side::R => 'R',
        };
        write!(f, "{side}{}", self.index)
    }
}

/// An ordered list of Hurwitz moves, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MoveSequence(pub Vec<HurwitzMove>);

impl MoveSequence {
    pub fn new(moves: Vec<HurwitzMove>) -> Self {
        MoveSequence(moves)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, HurwitzMove> {
        self.0.iter()
    }

    /// The sequence undoing this one: inverses in reverse order.
    pub fn inverse(&self) -> MoveSequence {
        MoveSequence(self.0.iter().rev().map(HurwitzMove::inverse).collect())
    }
}

fn locate(e: Error, position: usize) -> Error {
    match e {
        Error::MoveOutOfBounds { mv, len, .. } => Error::MoveOutOfBounds { mv, position, len },
        other => other,
    }
}

/// Applies one Hurwitz move at the tuple level.
pub fn sharp_move(t: &TwistTuple, mv: HurwitzMove) -> Result<TwistTuple> {
    mv.check_bounds(t.len())?;
    let k = mv.index - 1;
    let mut entries = t.entries.clone();
    match mv.side {
        Side::L => {
            let twisted = twist_apply(&entries[k], &entries[k + 1])?;
            entries[k + 1] = entries[k].clone();
            entries[k] = twisted;
        }
        Side::R => {
            let untwisted = twist_apply_pow(&entries[k + 1], -1, &entries[k])?;
            entries[k] = entries[k + 1].clone();
            entries[k + 1] = untwisted;
        }
    }
    Ok(TwistTuple {
        genus: t.genus,
        entries,
    })
}

/// The `l × l` skew-symmetric matrix of pairwise algebraic intersections of
/// a tuple's entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntersectionMatrix {
    l: usize,
    // row-major
    entries: Vec<Int>,
}

impl IntersectionMatrix {
    /// Builds a matrix from rows, verifying skew-symmetry and zero diagonal.
    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self> {
        let l = rows.len();
        if rows.iter().any(|r| r.len() != l) {
            return Err(Error::Dimension("intersection matrix must be square".into()));
        }
        let m = IntersectionMatrix {
            l,
            entries: rows.into_iter().flatten().collect(),
        };
        m.check_skew()?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.l
    }

    pub fn at(&self, row: usize, col: usize) -> &Int {
        &self.entries[row * self.l + col]
    }

    fn at_mut(&mut self, row: usize, col: usize) -> &mut Int {
        &mut self.entries[row * self.l + col]
    }

    fn check_skew(&self) -> Result<()> {
        for i in 0..self.l {
            if !self.at(i, i).is_zero() {
                return Err(Error::Invariant(format!(
                    "nonzero diagonal entry at ({i},{i})"
                )));
            }
            for j in (i + 1)..self.l {
                if *self.at(i, j) != -self.at(j, i) {
                    return Err(Error::Invariant(format!(
                        "matrix not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_skew(&self) -> bool {
        self.check_skew().is_ok()
    }

    /// 0-based coordinates of the first zero entry strictly above the
    /// diagonal, scanning rows then columns.
    pub fn first_zero_pair(&self) -> Option<(usize, usize)> {
        for i in 0..self.l {
            for j in (i + 1)..self.l {
                if self.at(i, j).is_zero() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn all_offdiagonal_nonzero(&self) -> bool {
        self.first_zero_pair().is_none()
    }

    /// Number of unordered pairs `{i, j}`, `i < j`, with zero pairing.
    pub fn zero_pair_count(&self) -> usize {
        let mut count = 0;
        for i in 0..self.l {
            for j in (i + 1)..self.l {
                if self.at(i, j).is_zero() {
                    count += 1;
                }
            }
        }
        count
    }

    /// Applies a whole move sequence at the matrix level.
    pub fn apply_moves(&self, moves: &MoveSequence) -> Result<IntersectionMatrix> {
        let mut m = self.clone();
        for (position, mv) in moves.iter().enumerate() {
            m = flat_move(&m, *mv).map_err(|e| locate(e, position))?;
        }
        Ok(m)
    }
}

impl std::fmt::Debug for IntersectionMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.l {
            if i > 0 {
                writeln!(f)?;
            }
            for j in 0..self.l {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        Ok(())
    }
}

/// `M̂(t)`: the matrix with entry `(i, j)` equal to `⟨t_i, t_j⟩`.
pub fn matrix_of_tuple(t: &TwistTuple) -> IntersectionMatrix {
    let l = t.len();
    let mut m = IntersectionMatrix {
        l,
        entries: vec![Int::zero(); l * l],
    };
    for i in 0..l {
        for j in (i + 1)..l {
            let p = intersection_pairing(&t.entries[i], &t.entries[j])
                .expect("tuple entries share a genus");
            *m.at_mut(j, i) = -&p;
            *m.at_mut(i, j) = p;
        }
    }
    m
}

/// Applies one Hurwitz move at the matrix level, using the update rules for
/// the intersection matrix. For `L` at `i` (1-based, positions `i, i+1`):
///
/// ```text
/// m'_{i,i+1} = m_{i+1,i}        m'_{i+1,i} = m_{i,i+1}
/// m'_{i,k}   = m_{i+1,k} + m_{i+1,i} m_{i,k}
/// m'_{i+1,k} = m_{i,k}
/// m'_{j,i}   = m_{j,i+1} - m_{i,i+1} m_{j,i}
/// m'_{j,i+1} = m_{j,i}
/// ```
///
/// and for `R` at `i`:
///
/// ```text
/// m''_{i,i+1} = m_{i+1,i}       m''_{i+1,i} = m_{i,i+1}
/// m''_{i,k}   = m_{i+1,k}
/// m''_{i+1,k} = m_{i,k} - m_{i,i+1} m_{i+1,k}
/// m''_{j,i}   = m_{j,i+1}
/// m''_{j,i+1} = m_{j,i} + m_{i+1,i} m_{j,i+1}
/// ```
///
/// with `j, k ∉ {i, i+1}` and all other entries unchanged.
pub fn flat_move(m: &IntersectionMatrix, mv: HurwitzMove) -> Result<IntersectionMatrix> {
    mv.check_bounds(m.l)?;
    debug_assert!(m.is_skew());
    let a = mv.index - 1; // row/col of position i
    let b = a + 1; // row/col of position i+1
    let mut out = m.clone();

    *out.at_mut(a, b) = m.at(b, a).clone();
    *out.at_mut(b, a) = m.at(a, b).clone();

    match mv.side {
        Side::L => {
            for k in 0..m.l {
                if k == a || k == b {
                    continue;
                }
                *out.at_mut(a, k) = m.at(b, k) + m.at(b, a) * m.at(a, k);
                *out.at_mut(b, k) = m.at(a, k).clone();
                *out.at_mut(k, a) = m.at(k, b) - m.at(a, b) * m.at(k, a);
                *out.at_mut(k, b) = m.at(k, a).clone();
            }
        }
        Side::R => {
            for k in 0..m.l {
                if k == a || k == b {
                    continue;
                }
                *out.at_mut(a, k) = m.at(b, k).clone();
                *out.at_mut(b, k) = m.at(a, k) - m.at(a, b) * m.at(b, k);
                *out.at_mut(k, a) = m.at(k, b).clone();
                *out.at_mut(k, b) = m.at(k, a) + m.at(b, a) * m.at(k, b);
            }
        }
    }
    debug_assert!(out.is_skew());
    Ok(out)
}

/// The three standard genus-2 tuples of chain twists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardTuple {
    /// `(T1 T2 T3 T4 T5 T5 T4 T3 T2 T1)²`, length 20.
    A1,
    /// `(T1 T2 T3 T4)⁵`, length 20.
    A2,
    /// `(T1 T2 T3 T4 T5)⁶`, length 30.
    A3,
}

impl StandardTuple {
    pub fn name(&self) -> &'static str {
        match self {
            StandardTuple::A1 => "A1",
            StandardTuple::A2 => "A2",
            StandardTuple::A3 => "A3",
        }
    }
}

/// Builds `A1`, `A2` or `A3` over the genus-2 chain classes.
pub fn standard_tuple(which: StandardTuple) -> TwistTuple {
    let cs = chain_classes(2).expect("genus 2");
    let indices: Vec<usize> = match which {
        StandardTuple::A1 => {
            let half: Vec<usize> = (1..=5).chain((1..=5).rev()).collect();
            half.iter().cloned().cycle().take(20).collect()
        }
        StandardTuple::A2 => (1..=4).cycle().take(20).collect(),
        StandardTuple::A3 => (1..=5).cycle().take(30).collect(),
    };
    let entries = indices.into_iter().map(|i| cs[i - 1].clone()).collect();
    TwistTuple { genus: 2, entries }
}

/// `t1 • t2`: entries of `t1` followed by entries of `t2`.
pub fn concat(t1: &TwistTuple, t2: &TwistTuple) -> Result<TwistTuple> {
    if t1.genus != t2.genus {
        return Err(Error::GenusMismatch(t1.genus, t2.genus));
    }
    let mut entries = t1.entries.clone();
    entries.extend(t2.entries.iter().cloned());
    Ok(TwistTuple {
        genus: t1.genus,
        entries,
    })
}

/// Homology image of the total product `T_{t_1} ∘ … ∘ T_{t_l}` (rightmost
/// twist acting first). Hurwitz moves leave this matrix unchanged.
pub fn product_matrix(t: &TwistTuple) -> SymplecticMatrix {
    let mut acc = SymplecticMatrix::identity(t.genus);
    for e in &t.entries {
        acc = acc.mul(&transvection_matrix(e, 1));
    }
    acc
}

/// Replaces each entry `x` by `x + power·⟨x, δ⟩·δ`, the image of the tuple
/// under conjugation by `T_δ^power`.
pub fn conjugate_tuple(t: &TwistTuple, delta: &HomologyClass, power: i64) -> Result<TwistTuple> {
    if t.genus != delta.genus() {
        return Err(Error::GenusMismatch(t.genus, delta.genus()));
    }
    let entries = t
        .entries
        .iter()
        .map(|x| twist_apply_pow(delta, power, x))
        .collect::<Result<Vec<_>>>()?;
    Ok(TwistTuple {
        genus: t.genus,
        entries,
    })
}

/// `base • Π_j conjugate(block_j, δ, j·N)`, the twisted concatenation used
/// to spread blocks apart along a common curve: block `j` is conjugated by
/// `T_δ^{jN}` before concatenation, in the given block order.
pub fn twisted_concatenation(
    base: &TwistTuple,
    blocks: &[(TwistTuple, u32)],
    delta: &HomologyClass,
    n: u32,
) -> Result<TwistTuple> {
    let mut acc = base.clone();
    for (block, j) in blocks {
        let power = i64::from(*j) * i64::from(n);
        let conjugated = conjugate_tuple(block, delta, power)?;
        acc = concat(&acc, &conjugated)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::chain_classes;

    fn chain(i: usize) -> HomologyClass {
        chain_classes(2).unwrap()[i - 1].clone()
    }

    fn tuple(indices: &[usize]) -> TwistTuple {
        TwistTuple::new(2, indices.iter().map(|&i| chain(i)).collect()).unwrap()
    }

    fn hc(coords: &[i64]) -> HomologyClass {
        HomologyClass::from_i64(coords).unwrap()
    }

    #[test]
    fn sharp_move_examples() {
        let t = tuple(&[1, 2]);
        let l1 = sharp_move(&t, HurwitzMove::left(1)).unwrap();
        assert_eq!(l1.entries()[0], hc(&[-1, 1, 0, 0]));
        assert_eq!(l1.entries()[1], hc(&[1, 0, 0, 0]));

        let r1 = sharp_move(&t, HurwitzMove::right(1)).unwrap();
        assert_eq!(r1.entries()[0], hc(&[0, 1, 0, 0]));
        assert_eq!(r1.entries()[1], hc(&[1, -1, 0, 0]));

        // A twist fixes its own class.
        let same = tuple(&[3, 3]);
        assert_eq!(sharp_move(&same, HurwitzMove::left(1)).unwrap(), same);
        assert_eq!(sharp_move(&same, HurwitzMove::right(1)).unwrap(), same);
    }

    #[test]
    fn sharp_move_bounds() {
        let t = tuple(&[1, 2, 3]);
        assert!(sharp_move(&t, HurwitzMove::left(2)).is_ok());
        assert!(matches!(
            sharp_move(&t, HurwitzMove::left(3)),
            Err(Error::MoveOutOfBounds { .. })
        ));
        assert!(matches!(
            sharp_move(&t, HurwitzMove::right(0)),
            Err(Error::MoveOutOfBounds { .. })
        ));
    }

    #[test]
    fn matrix_of_tuple_examples() {
        let m = matrix_of_tuple(&tuple(&[1, 2, 3]));
        let want = [[0, 1, 0], [-1, 0, -1], [0, 1, 0]];
        for (i, row) in want.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                assert_eq!(*m.at(i, j), Int::from(*entry));
            }
        }
        assert_eq!(matrix_of_tuple(&tuple(&[1])).size(), 1);
        let twin = matrix_of_tuple(&tuple(&[1, 1]));
        assert!(twin.at(0, 1).is_zero());
    }

    #[test]
    fn flat_move_examples() {
        let m = matrix_of_tuple(&tuple(&[1, 2]));
        let l1 = flat_move(&m, HurwitzMove::left(1)).unwrap();
        assert_eq!(*l1.at(0, 1), Int::from(-1));
        assert_eq!(*l1.at(1, 0), Int::from(1));
        let r1 = flat_move(&m, HurwitzMove::right(1)).unwrap();
        assert_eq!(*r1.at(0, 1), Int::from(-1));

        // Pairwise disjoint classes: everything stays zero.
        let zeros = matrix_of_tuple(&tuple(&[1, 1, 1]));
        for k in 1..=2 {
            for mv in [HurwitzMove::left(k), HurwitzMove::right(k)] {
                assert_eq!(flat_move(&zeros, mv).unwrap(), zeros);
            }
        }
    }

    #[test]
    fn non_skew_matrix_rejected() {
        let rows = vec![
            vec![Int::from(0), Int::from(1)],
            vec![Int::from(1), Int::from(0)],
        ];
        assert!(matches!(
            IntersectionMatrix::from_rows(rows),
            Err(Error::Invariant(_))
        ));
    }

    #[test]
    fn diagram_commutes_on_small_example() {
        let t = tuple(&[1, 2, 3, 4, 5]);
        let moves = MoveSequence::new(vec![
            HurwitzMove::left(1),
            HurwitzMove::right(3),
            HurwitzMove::left(2),
            HurwitzMove::left(4),
            HurwitzMove::right(1),
        ]);
        let sharp_then_matrix = matrix_of_tuple(&t.apply_moves(&moves).unwrap());
        let matrix_then_flat = matrix_of_tuple(&t).apply_moves(&moves).unwrap();
        assert_eq!(sharp_then_matrix, matrix_then_flat);
    }

    #[test]
    fn moves_invert() {
        let t = tuple(&[1, 2, 3, 4]);
        let m = matrix_of_tuple(&t);
        for k in 1..=3 {
            for first in [HurwitzMove::left(k), HurwitzMove::right(k)] {
                let seq = MoveSequence::new(vec![first, first.inverse()]);
                assert_eq!(t.apply_moves(&seq).unwrap(), t);
                assert_eq!(m.apply_moves(&seq).unwrap(), m);
            }
        }
    }

    #[test]
    fn empty_sequence_is_identity() {
        let t = tuple(&[2, 4]);
        assert_eq!(t.apply_moves(&MoveSequence::default()).unwrap(), t);
    }

    #[test]
    fn standard_tuple_shapes() {
        let a1 = standard_tuple(StandardTuple::A1);
        let a2 = standard_tuple(StandardTuple::A2);
        let a3 = standard_tuple(StandardTuple::A3);
        assert_eq!(a1.len(), 20);
        assert_eq!(a2.len(), 20);
        assert_eq!(a3.len(), 30);
        for (i, want) in (1..=5).enumerate() {
            assert_eq!(a1.entries()[i], chain(want));
        }
        // A1 is the palindrome block repeated.
        assert_eq!(a1.entries()[5], chain(5));
        assert_eq!(a1.entries()[9], chain(1));
        assert_eq!(a1.entries()[10], chain(1));
    }

    #[test]
    fn products_of_standard_tuples() {
        assert!(product_matrix(&standard_tuple(StandardTuple::A3)).is_identity());
        assert!(product_matrix(&standard_tuple(StandardTuple::A1)).is_identity());
        assert!(product_matrix(&standard_tuple(StandardTuple::A2)).is_neg_identity());
    }

    #[test]
    fn concat_examples() {
        let a2 = standard_tuple(StandardTuple::A2);
        let g1 = TwistTuple::new(2, vec![chain(1)]).unwrap();
        assert_eq!(concat(&a2, &g1).unwrap().len(), 21);
        assert_eq!(concat(&a2, &TwistTuple::empty(2)).unwrap(), a2);
        let m = matrix_of_tuple(&concat(&standard_tuple(StandardTuple::A1), &g1).unwrap());
        assert_eq!(m.size(), 21);
        assert!(m.is_skew());
    }

    #[test]
    fn product_is_hurwitz_invariant() {
        let t = tuple(&[1, 3, 2, 5, 4]);
        let before = product_matrix(&t);
        for k in 1..=4 {
            for mv in [HurwitzMove::left(k), HurwitzMove::right(k)] {
                let after = product_matrix(&sharp_move(&t, mv).unwrap());
                assert_eq!(before, after, "{mv}");
            }
        }
    }

    #[test]
    fn conjugate_tuple_examples() {
        let t = tuple(&[2]);
        assert_eq!(conjugate_tuple(&t, &chain(1), 0).unwrap(), t);
        // ⟨c2, c1⟩ = -1 so conjugation by T_{c1}^N sends c2 to c2 - N c1.
        let moved = conjugate_tuple(&t, &chain(1), 7).unwrap();
        assert_eq!(moved.entries()[0], hc(&[-7, 1, 0, 0]));

        let big = tuple(&[1, 2, 3, 4, 5, 2, 4]);
        let k = 3;
        let conj = conjugate_tuple(&big, &chain(2), k).unwrap();
        let c = transvection_matrix(&chain(2), k);
        let lhs = product_matrix(&conj);
        let rhs = c.mul(&product_matrix(&big)).mul(&c.inverse());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn twisted_concatenation_reduces_to_concat() {
        let base = tuple(&[1, 2]);
        let block = tuple(&[3, 4]);
        let delta = chain(1);
        let single =
            twisted_concatenation(&base, &[(block.clone(), 1)], &delta, 9).unwrap();
        let direct = concat(&base, &conjugate_tuple(&block, &delta, 9).unwrap()).unwrap();
        assert_eq!(single, direct);

        let none = twisted_concatenation(&base, &[], &delta, 5).unwrap();
        assert_eq!(none, base);
    }

    #[test]
    fn orientation_flip_travels_with_entry() {
        let t = tuple(&[1, 2, 3, 4, 5]);
        let moves = MoveSequence::new(vec![
            HurwitzMove::left(2),
            HurwitzMove::right(4),
            HurwitzMove::left(1),
            HurwitzMove::left(3),
            HurwitzMove::right(2),
        ]);
        let base = matrix_of_tuple(&t.apply_moves(&moves).unwrap());
        let l = base.size();
        for pos in 0..t.len() {
            let flipped = matrix_of_tuple(
                &t.with_negated_entry(pos).apply_moves(&moves).unwrap(),
            );
            for i in 0..l {
                for j in 0..l {
                    assert_eq!(
                        base.at(i, j).is_zero(),
                        flipped.at(i, j).is_zero(),
                        "zero pattern changed at ({i},{j})"
                    );
                }
            }
            // The difference must be sign flips confined to one row and the
            // matching column: flipped[i][j] = -base[i][j] exactly when one
            // of i, j equals some r, and equality everywhere else.
            let matches_flip_at = |r: usize| {
                (0..l).all(|i| {
                    (0..l).all(|j| {
                        let crossed = (i == r) != (j == r);
                        if crossed {
                            *flipped.at(i, j) == -base.at(i, j)
                        } else {
                            flipped.at(i, j) == base.at(i, j)
                        }
                    })
                })
            };
            let unchanged = (0..l).all(|i| (0..l).all(|j| flipped.at(i, j) == base.at(i, j)));
            assert!(
                unchanged || (0..l).any(matches_flip_at),
                "entry {pos}: flip is not a single row/column sign change"
            );
        }
    }
}
