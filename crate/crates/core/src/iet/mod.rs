//! Interval exchange transformations over a real number field.
//!
//! An exchange on `[0, L)` is given by interval lengths and a permutation
//! recording where each interval lands in the image. Translations are always
//! derived, never stored independently of `(lengths, perm)`.

mod format;
mod induce;
mod wedge;

use std::cmp::Ordering;
use std::fmt;

pub use format::IetFile;
pub use induce::{FirstReturn, DEFAULT_RETURN_CAP};
pub use wedge::{saf, WedgeClass};

use crate::error::{Error, Result};
use crate::exactnum::{AlgNum, NumberField, Rational};

#[derive(Clone)]
pub struct Iet {
    field: NumberField,
    total: AlgNum,
    lengths: Vec<AlgNum>,
    /// `perm[i]` is the position of interval `i` in the image order (0-based).
    perm: Vec<usize>,
    circle: bool,
    starts: Vec<AlgNum>,
    translations: Vec<AlgNum>,
}

/// A translated piece: source `[start, start + len)` moves by `translation`.
#[derive(Clone, Debug)]
pub(crate) struct Piece {
    pub start: AlgNum,
    pub len: AlgNum,
    pub translation: AlgNum,
}

/// Sorts indices by exact value; the first comparison error wins.
fn argsort(keys: &[AlgNum]) -> Result<Vec<usize>> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    let mut err = None;
    idx.sort_by(|&i, &j| match keys[i].cmp_value(&keys[j]) {
        Ok(o) => o,
        Err(e) => {
            err.get_or_insert(e);
            Ordering::Equal
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(idx),
    }
}

impl Iet {
    /// Builds an exchange from lengths and a 0-based image-position
    /// permutation. Translation of interval `i` is the total length placed
    /// before it in the image minus its own left endpoint.
    pub fn new(
        field: &NumberField,
        total: AlgNum,
        lengths: Vec<AlgNum>,
        perm: Vec<usize>,
        circle: bool,
    ) -> Result<Self> {
        let n = lengths.len();
        if n == 0 {
            return Err(Error::EmptyExchange);
        }
        if total.field() != field || lengths.iter().any(|l| l.field() != field) {
            return Err(Error::FieldMismatch);
        }
        for (i, l) in lengths.iter().enumerate() {
            if !l.is_positive()? {
                return Err(Error::NonPositiveLength(i));
            }
        }
        if perm.len() != n {
            return Err(Error::NotBijection);
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::NotBijection);
            }
        }
        let mut starts = Vec::with_capacity(n);
        let mut acc = field.zero();
        for l in &lengths {
            starts.push(acc.clone());
            acc = &acc + l;
        }
        if acc != total {
            return Err(Error::LengthSum);
        }
        let mut by_position = vec![0; n];
        for (i, &p) in perm.iter().enumerate() {
            by_position[p] = i;
        }
        let mut image_starts = vec![field.zero(); n];
        let mut acc = field.zero();
        for &i in &by_position {
            image_starts[i] = acc.clone();
            acc = &acc + &lengths[i];
        }
        let translations = image_starts.iter().zip(&starts).map(|(img, s)| img - s).collect();
        Ok(Iet {
            field: field.clone(),
            total,
            lengths,
            perm,
            circle,
            starts,
            translations,
        })
    }

    /// The identity on `[0, total)`.
    pub fn identity(field: &NumberField, total: AlgNum, circle: bool) -> Result<Self> {
        Iet::new(field, total.clone(), vec![total], vec![0], circle)
    }

    /// Rotation `x -> x + theta (mod total)`, `0 <= theta < total`, as a
    /// two-interval exchange (one interval when `theta = 0`).
    pub fn rotation(field: &NumberField, total: AlgNum, theta: AlgNum) -> Result<Self> {
        if theta.is_zero() {
            return Iet::identity(field, total, true);
        }
        let rest = &total - &theta;
        Iet::new(field, total, vec![rest, theta], vec![1, 0], true)
    }

    /// Exchange from arbitrary pieces covering `[0, total)` whose images tile
    /// `[0, total)` as well.
    pub(crate) fn from_pieces(field: &NumberField, total: &AlgNum, pieces: Vec<Piece>, circle: bool) -> Result<Self> {
        let starts: Vec<AlgNum> = pieces.iter().map(|p| p.start.clone()).collect();
        let order = argsort(&starts)?;
        let mut sorted: Vec<Piece> = order.iter().map(|&i| pieces[i].clone()).collect();
        let mut cursor = field.zero();
        for p in &sorted {
            if p.start != cursor {
                return Err(Error::BadPartition);
            }
            cursor = &cursor + &p.len;
        }
        if &cursor != total {
            return Err(Error::BadPartition);
        }
        let images: Vec<AlgNum> = sorted.iter().map(|p| &p.start + &p.translation).collect();
        let image_order = argsort(&images)?;
        let mut perm = vec![0; sorted.len()];
        let mut cursor = field.zero();
        for (pos, &i) in image_order.iter().enumerate() {
            if images[i] != cursor {
                return Err(Error::BadPartition);
            }
            cursor = &cursor + &sorted[i].len;
            perm[i] = pos;
        }
        let lengths = sorted.iter_mut().map(|p| p.len.clone()).collect();
        Iet::new(field, total.clone(), lengths, perm, circle)
    }

    pub(crate) fn pieces(&self) -> Vec<Piece> {
        (0..self.len())
            .map(|i| Piece {
                start: self.starts[i].clone(),
                len: self.lengths[i].clone(),
                translation: self.translations[i].clone(),
            })
            .collect()
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn total(&self) -> &AlgNum {
        &self.total
    }

    pub fn lengths(&self) -> &[AlgNum] {
        &self.lengths
    }

    /// 0-based image positions.
    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_circle(&self) -> bool {
        self.circle
    }

    /// Left endpoints `a_0, ..., a_{n-1}`.
    pub fn starts(&self) -> &[AlgNum] {
        &self.starts
    }

    pub fn translations(&self) -> &[AlgNum] {
        &self.translations
    }

    pub fn len(&self) -> usize {
        self.lengths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lengths.is_empty()
    }

    pub fn with_circle(mut self, circle: bool) -> Self {
        self.circle = circle;
        self
    }

    /// Merges neighbouring intervals that share a translation.
    pub fn canonical(&self) -> Iet {
        let mut lengths: Vec<AlgNum> = Vec::with_capacity(self.len());
        let mut trans: Vec<&AlgNum> = Vec::with_capacity(self.len());
        let mut keep = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            if trans.last() == Some(&&self.translations[i]) {
                let last = lengths.last_mut().expect("nonempty");
                *last = &*last + &self.lengths[i];
            } else {
                lengths.push(self.lengths[i].clone());
                trans.push(&self.translations[i]);
                keep.push(i);
            }
        }
        if keep.len() == self.len() {
            return self.clone();
        }
        // merged runs stay adjacent in the image, so image order is inherited
        let mut order: Vec<usize> = (0..keep.len()).collect();
        order.sort_by_key(|&k| self.perm[keep[k]]);
        let mut perm = vec![0; keep.len()];
        for (pos, &k) in order.iter().enumerate() {
            perm[k] = pos;
        }
        Iet::new(&self.field, self.total.clone(), lengths, perm, self.circle).expect("merging preserves validity")
    }

    fn locate(&self, x: &AlgNum) -> Result<usize> {
        if x.is_negative()? || x.cmp_value(&self.total)? != Ordering::Less {
            return Err(Error::OutOfDomain);
        }
        // last interval whose start is <= x
        let (mut lo, mut hi) = (0, self.len());
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.starts[mid].cmp_value(x)? == Ordering::Greater {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(lo)
    }

    /// `f(x) = x + t_i` on `[a_{i-1}, a_i)`.
    pub fn eval(&self, x: &AlgNum) -> Result<AlgNum> {
        if x.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        let i = self.locate(x)?;
        Ok(x + &self.translations[i])
    }

    fn check_same_domain(&self, other: &Iet) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.total != other.total {
            return Err(Error::DomainMismatch);
        }
        Ok(())
    }

    /// `x -> self(inner(x))` on the common refinement.
    pub fn compose(&self, inner: &Iet) -> Result<Iet> {
        self.check_same_domain(inner)?;
        let mut pieces = Vec::new();
        for p in inner.pieces() {
            let img_lo = &p.start + &p.translation;
            let img_hi = &img_lo + &p.len;
            let mut j = self.locate(&img_lo)?;
            let mut lo = img_lo.clone();
            loop {
                let end_j = &self.starts[j] + &self.lengths[j];
                let hi = if end_j.cmp_value(&img_hi)? == Ordering::Less {
                    end_j
                } else {
                    img_hi.clone()
                };
                pieces.push(Piece {
                    start: &lo - &p.translation,
                    len: &hi - &lo,
                    translation: &p.translation + &self.translations[j],
                });
                if hi == img_hi {
                    break;
                }
                lo = hi;
                j += 1;
            }
        }
        Ok(Iet::from_pieces(&self.field, &self.total, pieces, self.circle && inner.circle)?.canonical())
    }

    pub fn inverse(&self) -> Result<Iet> {
        let pieces = self
            .pieces()
            .into_iter()
            .map(|p| Piece {
                start: &p.start + &p.translation,
                len: p.len,
                translation: -p.translation,
            })
            .collect();
        Iet::from_pieces(&self.field, &self.total, pieces, self.circle)
    }

    /// `x -> self(x) + c (mod L)` on the circle; intervals whose image
    /// crosses `L` are split there.
    pub fn rotate(&self, c: &AlgNum) -> Result<Iet> {
        if !self.circle {
            return Err(Error::NotCircle);
        }
        if c.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if c.is_negative()? || c.cmp_value(&self.total)? != Ordering::Less {
            return Err(Error::InvalidArgument("rotation must satisfy 0 <= c < L".into()));
        }
        let mut pieces = Vec::with_capacity(self.len() + 1);
        for p in self.pieces() {
            let shifted = &p.translation + c;
            let img_lo = &p.start + &shifted;
            let img_hi = &img_lo + &p.len;
            if img_lo.cmp_value(&self.total)? != Ordering::Less {
                pieces.push(Piece {
                    translation: &shifted - &self.total,
                    ..p
                });
            } else if img_hi.cmp_value(&self.total)? == Ordering::Greater {
                let head = &self.total - &img_lo;
                pieces.push(Piece {
                    start: p.start.clone(),
                    len: head.clone(),
                    translation: shifted.clone(),
                });
                pieces.push(Piece {
                    start: &p.start + &head,
                    len: &p.len - &head,
                    translation: &shifted - &self.total,
                });
            } else {
                pieces.push(Piece {
                    translation: shifted,
                    ..p
                });
            }
        }
        Iet::from_pieces(&self.field, &self.total, pieces, true)
    }

    /// Conjugate by `x -> s x`: an exchange on `[0, sL)`.
    pub fn scale(&self, s: &AlgNum) -> Result<Iet> {
        if s.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if !s.is_positive()? {
            return Err(Error::NonPositiveScale);
        }
        let lengths = self.lengths.iter().map(|l| l * s).collect();
        Iet::new(&self.field, &self.total * s, lengths, self.perm.clone(), self.circle)
    }

    pub fn scale_rational(&self, s: &Rational) -> Result<Iet> {
        self.scale(&self.field.from_rational(s.clone()))
    }

    /// Involution swapping each pair of equal-length blocks by translation.
    /// `pairing` is a 0-based involutive permutation; fixed points stay put.
    /// The result lives on the circle of length `sum(blocks)`.
    pub fn pair_involution(field: &NumberField, blocks: Vec<AlgNum>, pairing: &[usize]) -> Result<Iet> {
        let n = blocks.len();
        if pairing.len() != n || pairing.iter().any(|&j| j >= n) {
            return Err(Error::NotInvolution);
        }
        for (i, &j) in pairing.iter().enumerate() {
            if pairing[j] != i {
                return Err(Error::NotInvolution);
            }
            if blocks[i] != blocks[j] {
                return Err(Error::PairLengthMismatch(i.min(j), i.max(j)));
            }
        }
        let total = blocks.iter().fold(field.zero(), |acc, b| &acc + b);
        // equal lengths make the pairing itself the image-position map
        Iet::new(field, total, blocks, pairing.to_vec(), true)
    }

    /// Image intervals tile `[0, L)` exactly.
    pub fn check_bijection(&self) -> Result<bool> {
        let images: Vec<AlgNum> = (0..self.len())
            .map(|i| &self.starts[i] + &self.translations[i])
            .collect();
        let order = argsort(&images)?;
        let mut cursor = self.field.zero();
        for &i in &order {
            if images[i] != cursor {
                return Ok(false);
            }
            cursor = &cursor + &self.lengths[i];
        }
        Ok(cursor == self.total)
    }

    /// `x -> self(x + c) - c` on the circle, for `0 <= c < L`.
    pub fn conjugate_by_rotation(&self, c: &AlgNum) -> Result<Iet> {
        if c.is_zero() {
            return Ok(self.canonical());
        }
        let fwd = Iet::rotation(&self.field, self.total.clone(), c.clone())?;
        let back = Iet::rotation(&self.field, self.total.clone(), &self.total - c)?;
        Ok(back.compose(&self.compose(&fwd)?)?.with_circle(self.circle))
    }

    /// Smallest `c` in `[0, L)` with `self.conjugate_by_rotation(c) == other`,
    /// if any.
    ///
    /// A rotation conjugacy carries discontinuities onto discontinuities, so
    /// only differences of interval starts need testing.
    pub fn rotation_conjugator(&self, other: &Iet) -> Result<Option<AlgNum>> {
        self.check_same_domain(other)?;
        let (a, b) = (self.canonical(), other.canonical());
        let mut cands: Vec<AlgNum> = Vec::new();
        for s in &a.starts {
            for t in &b.starts {
                let mut c = s - t;
                if c.is_negative()? {
                    c = &c + &self.total;
                }
                if !cands.contains(&c) {
                    cands.push(c);
                }
            }
        }
        for i in argsort(&cands)? {
            if a.conjugate_by_rotation(&cands[i])? == b {
                return Ok(Some(cands[i].clone()));
            }
        }
        Ok(None)
    }

    /// Floating-point shadow of the exchange: `(starts, translations, total)`.
    pub fn to_f64(&self) -> (Vec<f64>, Vec<f64>, f64) {
        (
            self.starts.iter().map(AlgNum::to_f64).collect(),
            self.translations.iter().map(AlgNum::to_f64).collect(),
            self.total.to_f64(),
        )
    }
}

impl PartialEq for Iet {
    /// Equal field, total, and canonical partition with translations. The
    /// circle flag is not part of the map.
    fn eq(&self, other: &Self) -> bool {
        if self.field != other.field || self.total != other.total {
            return false;
        }
        let (a, b) = (self.canonical(), other.canonical());
        a.lengths == b.lengths && a.translations == b.translations
    }
}

impl fmt::Debug for Iet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Iet on [0, {}) over {:?}{}",
            self.total,
            self.field,
            if self.circle { " (circle)" } else { "" }
        )?;
        for i in 0..self.len() {
            writeln!(
                f,
                "  [{}] len {} -> pos {} (t = {})",
                i, self.lengths[i], self.perm[i], self.translations[i]
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{IntPoly, Poly};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn k3() -> NumberField {
        let m: IntPoly = Poly::from_i64s(&[-1, 1, 1, 1]);
        NumberField::new(&m, &q(0, 1), &q(1, 1)).unwrap()
    }

    #[test]
    fn identity_and_rotation_translations() {
        let k = k3();
        let id = Iet::identity(&k, k.one(), false).unwrap();
        assert!(id.translations()[0].is_zero());
        let theta = k.generator();
        let rot = Iet::rotation(&k, k.one(), theta.clone()).unwrap();
        assert_eq!(rot.translations()[0], theta);
        assert_eq!(rot.translations()[1], theta.add_rational(&q(-1, 1)));
        assert_eq!(rot.eval(&k.zero()).unwrap(), theta);
        let x = k.from_rational(q(1, 3));
        assert_eq!(id.eval(&x).unwrap(), x);
    }

    #[test]
    fn constructor_errors() {
        let k = k3();
        let half = k.from_rational(q(1, 2));
        assert_eq!(
            Iet::new(&k, k.one(), vec![half.clone(), half.clone()], vec![0, 0], false).err(),
            Some(Error::NotBijection)
        );
        assert_eq!(
            Iet::new(&k, k.one(), vec![half.clone(), k.zero()], vec![0, 1], false).err(),
            Some(Error::NonPositiveLength(1))
        );
        assert_eq!(
            Iet::new(&k, k.from_int(2), vec![half.clone(), half], vec![1, 0], false).err(),
            Some(Error::LengthSum)
        );
    }

    #[test]
    fn eval_outside_domain() {
        let k = k3();
        let id = Iet::identity(&k, k.one(), false).unwrap();
        assert_eq!(id.eval(&k.one()).err(), Some(Error::OutOfDomain));
        assert_eq!(id.eval(&k.from_int(-1)).err(), Some(Error::OutOfDomain));
    }

    #[test]
    fn rational_rotations_compose() {
        let k = k3();
        let r1 = Iet::rotation(&k, k.one(), k.from_rational(q(1, 3))).unwrap();
        let r2 = Iet::rotation(&k, k.one(), k.from_rational(q(2, 3))).unwrap();
        assert_eq!(r1.compose(&r1).unwrap(), r2);
        assert_eq!(r1.compose(&r2).unwrap(), Iet::identity(&k, k.one(), true).unwrap());
    }

    #[test]
    fn inverse_contract() {
        let k = k3();
        let a = k.generator();
        let lengths = vec![a.clone(), &a * &a, &k.one() - &(&a + &(&a * &a))];
        let f = Iet::new(&k, k.one(), lengths, vec![2, 0, 1], false).unwrap();
        let inv = f.inverse().unwrap();
        let id = Iet::identity(&k, k.one(), false).unwrap();
        assert_eq!(f.compose(&inv).unwrap(), id);
        assert_eq!(inv.compose(&f).unwrap(), id);
        assert!(f.check_bijection().unwrap());
    }

    #[test]
    fn rotate_identity_by_half() {
        let k = k3();
        let id = Iet::identity(&k, k.one(), true).unwrap();
        let half = k.from_rational(q(1, 2));
        let r = id.rotate(&half).unwrap();
        assert_eq!(r, Iet::rotation(&k, k.one(), half).unwrap());
        assert_eq!(id.rotate(&k.zero()).unwrap(), id);
        let line = Iet::identity(&k, k.one(), false).unwrap();
        assert_eq!(line.rotate(&k.zero()).err(), Some(Error::NotCircle));
    }

    #[test]
    fn scaling() {
        let k = k3();
        let theta = k.generator();
        let rot = Iet::rotation(&k, k.one(), theta.clone()).unwrap();
        assert_eq!(rot.scale(&k.one()).unwrap(), rot);
        let two = k.from_int(2);
        let expect = Iet::rotation(&k, two.clone(), &theta * &two).unwrap();
        assert_eq!(rot.scale(&two).unwrap(), expect);
        assert_eq!(rot.scale(&k.from_int(-1)).err(), Some(Error::NonPositiveScale));
    }

    #[test]
    fn pair_involutions() {
        let k = k3();
        let a = k.generator();
        let swap = Iet::pair_involution(&k, vec![a.clone(), a.clone()], &[1, 0]).unwrap();
        assert_eq!(swap, Iet::rotation(&k, &a + &a, a.clone()).unwrap());
        assert_eq!(swap.compose(&swap).unwrap(), Iet::identity(&k, &a + &a, true).unwrap());
        let fixed = Iet::pair_involution(&k, vec![a.clone()], &[0]).unwrap();
        assert_eq!(fixed, Iet::identity(&k, a.clone(), true).unwrap());
        assert_eq!(
            Iet::pair_involution(&k, vec![a.clone(), k.one()], &[1, 0]).err(),
            Some(Error::PairLengthMismatch(0, 1))
        );
        assert_eq!(
            Iet::pair_involution(&k, vec![a.clone(), a.clone(), a], &[1, 2, 0]).err(),
            Some(Error::NotInvolution)
        );
    }

    #[test]
    fn canonical_merges_runs() {
        let k = k3();
        let half = k.from_rational(q(1, 2));
        let split = Iet::new(&k, k.one(), vec![half.clone(), half], vec![0, 1], false).unwrap();
        assert_eq!(split.canonical().len(), 1);
        assert_eq!(split, Iet::identity(&k, k.one(), false).unwrap());
    }

    #[test]
    fn rotation_conjugacy_round_trip() {
        let k = k3();
        let a = k.generator();
        let lengths = vec![a.clone(), &a * &a, &k.one() - &(&a + &(&a * &a))];
        let f = Iet::new(&k, k.one(), lengths, vec![2, 1, 0], true).unwrap();
        let c = k.from_rational(q(1, 5));
        let g = f.conjugate_by_rotation(&c).unwrap();
        assert_ne!(g, f);
        // g(x) = f(x + 1/5) - 1/5 at x = 0
        let expect = &f.eval(&c).unwrap() - &c;
        let expect = if expect.is_negative().unwrap() {
            &expect + &k.one()
        } else {
            expect
        };
        assert_eq!(g.eval(&k.zero()).unwrap(), expect);
        assert_eq!(f.rotation_conjugator(&g).unwrap(), Some(c));
        assert_eq!(f.rotation_conjugator(&f).unwrap(), Some(k.zero()));
        let h = Iet::new(&k, k.one(), f.lengths().to_vec(), vec![1, 0, 2], true).unwrap();
        assert_eq!(f.rotation_conjugator(&h).unwrap(), None);
    }
}
