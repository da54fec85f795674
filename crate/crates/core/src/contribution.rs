//! Contribution of one x-parallel edge to the square whose left side sits on a
//! vertical sweep line at `x`.
//!
//! As the line moves right the contribution is piecewise linear with six
//! cases, decided by where `x` and `x + s` fall relative to the edge's
//! endpoints `lo <= hi`:
//!
//! | case | condition                  | slope | intercept         |
//! |------|----------------------------|-------|-------------------|
//! | 1    | `lo <= hi <= x`            | 0     | 0                 |
//! | 2    | `lo <= x <= hi <= x + s`   | `-m`  | `m * hi`          |
//! | 3    | `lo <= x <= x + s <= hi`   | 0     | `m * s`           |
//! | 4    | `x <= lo <= hi <= x + s`   | 0     | `w`               |
//! | 5    | `x <= lo <= x + s <= hi`   | `m`   | `m * s - m * lo`  |
//! | 6    | `x + s <= lo`              | 0     | 0                 |
//!
//! with `w` the duration and `m = w / (hi - lo)`. Where two conditions hold
//! the lower case number wins; both pieces agree there.

use std::ops::{Add, AddAssign, Neg, Sub};

use crate::error::{HotspotError, Result};
use crate::model::{Orientation, WeightedEdge};
use crate::scalar::Scalar;

/// `slope * x + intercept`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearFn<S> {
    pub slope: S,
    pub intercept: S,
}

impl<S: Scalar> LinearFn<S> {
    pub fn new(slope: S, intercept: S) -> Self {
        LinearFn { slope, intercept }
    }

    pub fn zero() -> Self {
        LinearFn::new(S::zero(), S::zero())
    }

    pub fn constant(c: S) -> Self {
        LinearFn::new(S::zero(), c)
    }

    pub fn eval(&self, x: &S) -> S {
        self.slope.clone() * x.clone() + self.intercept.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.slope.is_zero() && self.intercept.is_zero()
    }
}

impl<S: Scalar> Add for LinearFn<S> {
    type Output = LinearFn<S>;

    fn add(self, rhs: Self) -> Self {
        LinearFn::new(self.slope + rhs.slope, self.intercept + rhs.intercept)
    }
}

impl<S: Scalar> Add<&LinearFn<S>> for &LinearFn<S> {
    type Output = LinearFn<S>;

    fn add(self, rhs: &LinearFn<S>) -> LinearFn<S> {
        LinearFn::new(
            self.slope.clone() + rhs.slope.clone(),
            self.intercept.clone() + rhs.intercept.clone(),
        )
    }
}

impl<S: Scalar> AddAssign<&LinearFn<S>> for LinearFn<S> {
    fn add_assign(&mut self, rhs: &LinearFn<S>) {
        *self = &*self + rhs;
    }
}

impl<S: Scalar> Sub for LinearFn<S> {
    type Output = LinearFn<S>;

    fn sub(self, rhs: Self) -> Self {
        LinearFn::new(self.slope - rhs.slope, self.intercept - rhs.intercept)
    }
}

impl<S: Scalar> Neg for LinearFn<S> {
    type Output = LinearFn<S>;

    fn neg(self) -> Self {
        LinearFn::new(-self.slope, -self.intercept)
    }
}

/// Which of the six relative positions an edge is in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    Passed = 1,
    Leaving = 2,
    Spanning = 3,
    Inside = 4,
    Entering = 5,
    Ahead = 6,
}

impl Case {
    pub fn number(self) -> u8 {
        self as u8
    }
}

fn check_horizontal<S: Scalar>(e: &WeightedEdge<S>) -> Result<()> {
    match e.orientation() {
        Orientation::X | Orientation::Point => Ok(()),
        _ => Err(HotspotError::VerticalEdge),
    }
}

pub fn classify_case<S: Scalar>(e: &WeightedEdge<S>, s: &S, x: &S) -> Result<Case> {
    check_horizontal(e)?;
    let right = x.clone() + s.clone();
    let (lo, hi) = (e.lo(), e.hi());
    if e.is_point() {
        return Ok(if x <= lo && *lo <= right {
            Case::Inside
        } else if lo < x {
            Case::Passed
        } else {
            Case::Ahead
        });
    }
    let case = if hi <= x {
        Case::Passed
    } else if lo <= x {
        if hi <= &right {
            Case::Leaving
        } else {
            Case::Spanning
        }
    } else if hi <= &right {
        Case::Inside
    } else if lo <= &right {
        Case::Entering
    } else {
        Case::Ahead
    };
    Ok(case)
}

/// The linear piece of `e` for `case`.
pub fn case_piece<S: Scalar>(e: &WeightedEdge<S>, s: &S, case: Case) -> LinearFn<S> {
    let w = e.duration().clone();
    let Some(m) = e.rate().cloned() else {
        return match case {
            Case::Inside => LinearFn::constant(w),
            _ => LinearFn::zero(),
        };
    };
    match case {
        Case::Passed | Case::Ahead => LinearFn::zero(),
        Case::Leaving => LinearFn::new(-m.clone(), m * e.hi().clone()),
        Case::Spanning => LinearFn::constant(m * s.clone()),
        Case::Inside => LinearFn::constant(w),
        Case::Entering => LinearFn::new(m.clone(), m.clone() * s.clone() - m * e.lo().clone()),
    }
}

/// The piece valid at sweep position `x`.
pub fn contribution_at<S: Scalar>(e: &WeightedEdge<S>, s: &S, x: &S) -> Result<LinearFn<S>> {
    let case = classify_case(e, s, x)?;
    Ok(case_piece(e, s, case))
}

/// The piece valid on an open interval just to the right of `x`.
///
/// Equals [`contribution_at`] except for a point edge at `x == lo`, which
/// leaves the sweep squares right after `x`.
pub fn contribution_after<S: Scalar>(e: &WeightedEdge<S>, s: &S, x: &S) -> Result<LinearFn<S>> {
    if e.is_point() && x == e.lo() {
        check_horizontal(e)?;
        return Ok(LinearFn::zero());
    }
    contribution_at(e, s, x)
}

/// Sorted distinct sweep positions at which the case of `e` changes.
pub fn update_events<S: Scalar>(e: &WeightedEdge<S>, s: &S) -> Result<Vec<S>> {
    check_horizontal(e)?;
    let (lo, hi) = (e.lo().clone(), e.hi().clone());
    let mut xs = vec![
        lo.clone() - s.clone(),
        hi.clone() - s.clone(),
        lo,
        hi,
    ];
    xs.sort_by(|a, b| a.total_cmp(b));
    xs.dedup();
    Ok(xs)
}

/// True when the update at `x` removes a point edge from the sweep squares.
/// Such updates are applied after every evaluation at the same `x`.
pub fn is_departure<S: Scalar>(e: &WeightedEdge<S>, x: &S) -> bool {
    e.is_point() && x == e.lo()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn edge(lo: i64, hi: i64, w: i64) -> WeightedEdge<Rational> {
        WeightedEdge::new2((q(lo), q(0)), (q(hi), q(0)), q(w)).unwrap()
    }

    #[test]
    fn case_examples() {
        assert_eq!(classify_case(&edge(0, 10, 10), &q(4), &q(2)).unwrap(), Case::Spanning);
        assert_eq!(classify_case(&edge(1, 3, 2), &q(4), &q(0)).unwrap(), Case::Inside);
        assert_eq!(classify_case(&edge(0, 3, 3), &q(4), &q(-10)).unwrap(), Case::Ahead);
    }

    #[test]
    fn piece_examples() {
        let f = contribution_at(&edge(0, 10, 10), &q(4), &q(2)).unwrap();
        assert_eq!(f, LinearFn::new(q(0), q(4)));
        let f = contribution_at(&edge(3, 10, 7), &q(4), &q(0)).unwrap();
        assert_eq!(f, LinearFn::new(q(1), q(1)));
        assert_eq!(f.eval(&q(0)), q(1));
        let f = contribution_at(&edge(0, 3, 3), &q(4), &q(2)).unwrap();
        assert_eq!(f, LinearFn::new(q(-1), q(3)));
        assert_eq!(f.eval(&q(2)), q(1));
    }

    #[test]
    fn vertical_edges_are_rejected() {
        let e = WeightedEdge::new2((q(0), q(0)), (q(0), q(5)), q(1)).unwrap();
        assert_eq!(classify_case(&e, &q(1), &q(0)), Err(HotspotError::VerticalEdge));
        assert!(contribution_at(&e, &q(1), &q(0)).is_err());
        assert!(update_events(&e, &q(1)).is_err());
    }

    #[test]
    fn event_positions() {
        assert_eq!(update_events(&edge(0, 3, 3), &q(4)).unwrap(), vec![q(-4), q(-1), q(0), q(3)]);
        assert_eq!(update_events(&edge(0, 10, 3), &q(4)).unwrap(), vec![q(-4), q(0), q(6), q(10)]);
        let p = WeightedEdge::point([q(5), q(0), q(0)], q(2)).unwrap();
        assert_eq!(update_events(&p, &q(4)).unwrap(), vec![q(1), q(5)]);
    }

    #[test]
    fn point_edges_step() {
        let p = WeightedEdge::point([q(5), q(0), q(0)], q(2)).unwrap();
        let s = q(4);
        assert_eq!(classify_case(&p, &s, &q(0)).unwrap(), Case::Ahead);
        assert_eq!(classify_case(&p, &s, &q(1)).unwrap(), Case::Inside);
        assert_eq!(classify_case(&p, &s, &q(5)).unwrap(), Case::Inside);
        assert_eq!(classify_case(&p, &s, &q(6)).unwrap(), Case::Passed);
        assert_eq!(contribution_at(&p, &s, &q(5)).unwrap(), LinearFn::constant(q(2)));
        assert!(contribution_after(&p, &s, &q(5)).unwrap().is_zero());
        assert_eq!(contribution_after(&p, &s, &q(1)).unwrap(), LinearFn::constant(q(2)));
        assert!(is_departure(&p, &q(5)));
        assert!(!is_departure(&p, &q(1)));
    }

    #[test]
    fn linear_fn_algebra() {
        let f = LinearFn::new(q(2), q(3));
        let g = LinearFn::new(q(-1), q(4));
        assert_eq!((f.clone() + g.clone()).eval(&q(5)), f.eval(&q(5)) + g.eval(&q(5)));
        assert!((f.clone() - f.clone()).is_zero());
        assert_eq!((-f.clone()).eval(&q(1)), q(-5));
    }
}
