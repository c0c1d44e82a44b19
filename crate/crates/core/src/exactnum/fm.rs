use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Relation {
    Ge,
    Gt,
}

impl Relation {
    fn combine(self, other: Relation) -> Relation {
        if self == Relation::Gt || other == Relation::Gt {
            Relation::Gt
        } else {
            Relation::Ge
        }
    }

    fn holds(self, lhs: &Rational, rhs: &Rational) -> bool {
        match self {
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
        }
    }
}

/// `coeffs · x  rel  rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Inequality {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
    pub rel: Relation,
}

impl Inequality {
    pub fn new(coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> Self {
        Self { coeffs, rhs, rel }
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self
            .coeffs
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b);
        self.rel.holds(&lhs, &self.rhs)
    }

    /// Scales so the first nonzero coefficient has absolute value one.
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            if !lead.is_one() {
                for c in self.coeffs.iter_mut() {
                    *c /= &lead;
                }
                self.rhs /= &lead;
            }
        }
        self
    }
}

fn eliminate(system: &[Inequality], var: usize) -> Vec<Inequality> {
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for ineq in system {
        let a = &ineq.coeffs[var];
        if a.is_zero() {
            out.push(ineq.clone());
        } else if a.is_positive() {
            pos.push(ineq);
        } else {
            neg.push(ineq);
        }
    }
    for p in &pos {
        for q in &neg {
            let sp = q.coeffs[var].abs();
            let sq = p.coeffs[var].clone();
            let coeffs = p
                .coeffs
                .iter()
                .zip(&q.coeffs)
                .map(|(a, b)| a * &sp + b * &sq)
                .collect();
            let rhs = &p.rhs * &sp + &q.rhs * &sq;
            out.push(Inequality::new(coeffs, p.rel.combine(q.rel), rhs).normalized());
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Chooses a value for `x[var]` given the already fixed `x[..var]`.
fn pick_value(system: &[Inequality], x: &[Rational], var: usize) -> Option<Rational> {
    let mut lower: Option<(Rational, bool)> = None;
    let mut upper: Option<(Rational, bool)> = None;
    for ineq in system {
        let a = &ineq.coeffs[var];
        let rest = (0..var).fold(Rational::zero(), |acc, j| acc + &ineq.coeffs[j] * &x[j]);
        let bound_rhs = &ineq.rhs - rest;
        let strict = ineq.rel == Relation::Gt;
        if a.is_zero() {
            if !ineq.rel.holds(&Rational::zero(), &bound_rhs) {
                return None;
            }
            continue;
        }
        let bound = &bound_rhs / a;
        if a.is_positive() {
            let tighter = match &lower {
                None => true,
                Some((b, s)) => bound > *b || (bound == *b && strict && !s),
            };
            if tighter {
                lower = Some((bound, strict));
            }
        } else {
            let tighter = match &upper {
                None => true,
                Some((b, s)) => bound < *b || (bound == *b && strict && !s),
            };
            if tighter {
                upper = Some((bound, strict));
            }
        }
    }
    let above = |v: &Rational| match &lower {
        None => true,
        Some((b, s)) => if *s { v > b } else { v >= b },
    };
    let below = |v: &Rational| match &upper {
        None => true,
        Some((b, s)) => if *s { v < b } else { v <= b },
    };
    let candidate = match (&lower, &upper) {
        (None, None) => Rational::zero(),
        (Some((b, s)), _) => {
            if *s {
                b.floor() + Rational::one()
            } else {
                b.ceil()
            }
        }
        (None, Some((b, s))) => {
            if *s {
                b.ceil() - Rational::one()
            } else {
                b.floor()
            }
        }
    };
    if above(&candidate) && below(&candidate) {
        return Some(candidate);
    }
    let (Some((lo, _)), Some((hi, _))) = (&lower, &upper) else {
        return None;
    };
    let mid = (lo + hi) / Rational::from_integer(2.into());
    (above(&mid) && below(&mid)).then_some(mid)
}

/// Decides nonemptiness of `{x : a_k · x rel_k c_k}` by exact Fourier–Motzkin
/// elimination, returning a witness point when feasible.
pub fn fm_feasible(constraints: &[Inequality]) -> Option<Vec<Rational>> {
    let n = constraints.first().map_or(0, |c| c.coeffs.len());
    debug_assert!(constraints.iter().all(|c| c.coeffs.len() == n));
    // stages[k] constrains x[0..k]
    let mut stages: Vec<Vec<Inequality>> = Vec::with_capacity(n + 1);
    stages.push(constraints.to_vec());
    for var in (0..n).rev() {
        let next = eliminate(stages.last().unwrap(), var);
        stages.push(next);
    }
    stages.reverse();
    for ineq in &stages[0] {
        if !ineq.rel.holds(&Rational::zero(), &ineq.rhs) {
            return None;
        }
    }
    let mut x: Vec<Rational> = Vec::with_capacity(n);
    for var in 0..n {
        let value = pick_value(&stages[var + 1], &x, var)?;
        x.push(value);
    }
    debug_assert!(constraints.iter().all(|c| c.is_satisfied(&x)));
    Some(x)
}
