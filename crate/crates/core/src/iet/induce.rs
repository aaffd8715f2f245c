use std::cmp::Ordering;

use super::{Iet, Piece};
use crate::error::{Error, Result};
use crate::exactnum::AlgNum;

/// Default budget of point-iterations for [`Iet::first_return`].
pub const DEFAULT_RETURN_CAP: usize = 100_000;

/// Induced map on `[0, b)` with the return time of every piece.
#[derive(Clone, Debug)]
pub struct FirstReturn {
    /// Canonicalized induced exchange.
    pub map: Iet,
    /// Uncanonicalized pieces as `(start, length, translation, return time)`,
    /// sorted by start.
    pub pieces: Vec<(AlgNum, AlgNum, AlgNum, usize)>,
}

impl FirstReturn {
    /// `sum(length * return time)`; equals `L` when the map is minimal.
    pub fn return_measure(&self) -> AlgNum {
        let k = self.map.field();
        self.pieces.iter().fold(k.zero(), |acc, (_, len, _, time)| {
            &acc + &len.scale(&crate::exactnum::Rational::from_integer((*time).into()))
        })
    }
}

struct Orbit {
    src: AlgNum,
    len: AlgNum,
    pos: AlgNum,
    steps: usize,
}

impl Iet {
    /// First-return map to `[0, b)` with the default iteration cap.
    pub fn first_return(&self, b: &AlgNum) -> Result<Iet> {
        Ok(self.first_return_with_cap(b, DEFAULT_RETURN_CAP)?.map)
    }

    /// First-return map to `[0, b)`.
    ///
    /// Pushes sub-intervals of `[0, b)` forward through the exchange, splitting
    /// at the exchange's breakpoints and at `b`, until each piece lands back
    /// inside `[0, b)`. Every split piece costs one point-iteration against
    /// `cap`.
    pub fn first_return_with_cap(&self, b: &AlgNum, cap: usize) -> Result<FirstReturn> {
        if b.field() != self.field() {
            return Err(Error::FieldMismatch);
        }
        if !b.is_positive()? || b.cmp_value(self.total())? == Ordering::Greater {
            return Err(Error::InvalidArgument("first return needs 0 < b <= L".into()));
        }
        let k = self.field();
        let mut work = vec![Orbit {
            src: k.zero(),
            len: b.clone(),
            pos: k.zero(),
            steps: 0,
        }];
        let mut done = Vec::new();
        let mut iterations = 0usize;
        while let Some(o) = work.pop() {
            if o.steps > 0 && o.pos.cmp_value(b)? == Ordering::Less {
                let end = &o.pos + &o.len;
                if end.cmp_value(b)? != Ordering::Greater {
                    done.push(o);
                } else {
                    let head = b - &o.pos;
                    work.push(Orbit {
                        src: &o.src + &head,
                        len: &o.len - &head,
                        pos: b.clone(),
                        steps: o.steps,
                    });
                    done.push(Orbit { len: head, ..o });
                }
                continue;
            }
            // apply the exchange once, splitting at its breakpoints
            let end = &o.pos + &o.len;
            let mut j = self.locate(&o.pos)?;
            let mut lo = o.pos.clone();
            loop {
                iterations += 1;
                if iterations > cap {
                    return Err(Error::IterationCap(cap));
                }
                let end_j = &self.starts()[j] + &self.lengths()[j];
                let hi = if end_j.cmp_value(&end)? == Ordering::Less {
                    end_j
                } else {
                    end.clone()
                };
                work.push(Orbit {
                    src: &o.src + &(&lo - &o.pos),
                    len: &hi - &lo,
                    pos: &lo + &self.translations()[j],
                    steps: o.steps + 1,
                });
                if hi == end {
                    break;
                }
                lo = hi;
                j += 1;
            }
        }
        let pieces: Vec<Piece> = done
            .iter()
            .map(|o| Piece {
                start: o.src.clone(),
                len: o.len.clone(),
                translation: &o.pos - &o.src,
            })
            .collect();
        let map = Iet::from_pieces(k, b, pieces, self.is_circle())?;
        let mut report: Vec<(AlgNum, AlgNum, AlgNum, usize)> = done
            .into_iter()
            .map(|o| {
                let t = &o.pos - &o.src;
                (o.src, o.len, t, o.steps)
            })
            .collect();
        let starts: Vec<AlgNum> = report.iter().map(|r| r.0.clone()).collect();
        let order = super::argsort(&starts)?;
        report = order.into_iter().map(|i| report[i].clone()).collect();
        Ok(FirstReturn {
            map: map.canonical(),
            pieces: report,
        })
    }
}
