//! Truncated multivariate Taylor series in `f64`, used as an independent numeric shadow
//! of the exact differential-operator computations.

use std::collections::HashMap;
use std::sync::Arc;

/// Monomials of total degree at most `order` in `nvars` variables, with a product table.
#[derive(Debug)]
pub struct JetSpace {
    nvars: usize,
    order: usize,
    monomials: Vec<Vec<u8>>,
    index: HashMap<Vec<u8>, usize>,
}

impl JetSpace {
    pub fn new(nvars: usize, order: usize) -> Arc<JetSpace> {
        let mut monomials = vec![vec![0u8; nvars]];
        let mut frontier = monomials.clone();
        for _ in 0..order {
            let mut next = Vec::new();
            for m in &frontier {
                // Raise only variables at or after the last nonzero one to avoid duplicates.
                let start = m.iter().rposition(|&e| e > 0).unwrap_or(0);
                for i in start..nvars {
                    let mut a = m.clone();
                    a[i] += 1;
                    next.push(a);
                }
            }
            monomials.extend(next.iter().cloned());
            frontier = next;
        }
        let index = monomials.iter().enumerate().map(|(k, m)| (m.clone(), k)).collect();
        Arc::new(JetSpace { nvars, order, monomials, index })
    }

    fn degree(&self, k: usize) -> usize {
        self.monomials[k].iter().map(|&e| e as usize).sum()
    }
}

/// Series valid up to total degree `valid` (at most the space order).
#[derive(Debug, Clone)]
pub struct Jet {
    space: Arc<JetSpace>,
    valid: usize,
    coeffs: Vec<f64>,
}

impl Jet {
    pub fn constant(space: &Arc<JetSpace>, c: f64) -> Jet {
        let mut coeffs = vec![0.0; space.monomials.len()];
        coeffs[0] = c;
        Jet { space: space.clone(), valid: space.order, coeffs }
    }

    /// `x_i` expanded around `x_i = at`.
    pub fn variable(space: &Arc<JetSpace>, i: usize, at: f64) -> Jet {
        let mut j = Jet::constant(space, at);
        if space.order > 0 {
            let mut m = vec![0u8; space.nvars];
            m[i] = 1;
            j.coeffs[space.index[&m]] = 1.0;
        }
        j
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn valid(&self) -> usize {
        self.valid
    }

    pub fn add(&self, other: &Jet) -> Jet {
        let valid = self.valid.min(other.valid);
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Jet { space: self.space.clone(), valid, coeffs }.truncated()
    }

    pub fn scale(&self, c: f64) -> Jet {
        Jet { space: self.space.clone(), valid: self.valid, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    fn truncated(mut self) -> Jet {
        for k in 0..self.coeffs.len() {
            if self.space.degree(k) > self.valid {
                self.coeffs[k] = 0.0;
            }
        }
        self
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        let sp = &self.space;
        let valid = self.valid.min(other.valid);
        let mut coeffs = vec![0.0; sp.monomials.len()];
        for (a, &ca) in self.coeffs.iter().enumerate() {
            if ca == 0.0 {
                continue;
            }
            let da = sp.degree(a);
            for (b, &cb) in other.coeffs.iter().enumerate() {
                if cb == 0.0 || da + sp.degree(b) > valid {
                    continue;
                }
                let m: Vec<u8> = sp.monomials[a].iter().zip(&sp.monomials[b]).map(|(x, y)| x + y).collect();
                coeffs[sp.index[&m]] += ca * cb;
            }
        }
        Jet { space: sp.clone(), valid, coeffs }
    }

    pub fn derivative(&self, i: usize) -> Jet {
        let sp = &self.space;
        let mut coeffs = vec![0.0; sp.monomials.len()];
        for (k, &c) in self.coeffs.iter().enumerate() {
            let e = sp.monomials[k][i];
            if c != 0.0 && e > 0 {
                let mut m = sp.monomials[k].clone();
                m[i] -= 1;
                coeffs[sp.index[&m]] += c * e as f64;
            }
        }
        Jet { space: sp.clone(), valid: self.valid.saturating_sub(1), coeffs }.truncated()
    }

    /// `self^p` for real `p`, by the binomial series around the nonzero constant term.
    pub fn powf(&self, p: f64) -> Jet {
        let a = self.value();
        assert!(a != 0.0, "power of a jet with zero constant term");
        let base = if p.fract() == 0.0 { a.powi(p as i32) } else { a.powf(p) };
        let mut u = self.scale(1.0 / a);
        u.coeffs[0] = 0.0;
        let mut out = Jet::constant(&self.space, 1.0);
        out.valid = self.valid;
        let mut term = out.clone();
        let mut binom = 1.0;
        for n in 1..=self.valid {
            binom *= (p - (n - 1) as f64) / n as f64;
            term = term.mul(&u);
            out = out.add(&term.scale(binom));
        }
        out.scale(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn space_sizes() {
        assert_eq!(JetSpace::new(3, 2).monomials.len(), 10);
        assert_eq!(JetSpace::new(6, 4).monomials.len(), 210);
    }

    #[test]
    fn power_series_matches_taylor() {
        let sp = JetSpace::new(2, 3);
        let d = Jet::variable(&sp, 1, 2.0).add(&Jet::variable(&sp, 0, 0.5).scale(-1.0));
        let f = d.powf(-0.5);
        // (1.5 + t)^{-1/2} along x2: third coefficient is binom(-1/2, 3) 1.5^{-7/2}
        let third = f.coeffs[sp.index[&vec![0, 3]]];
        let expect = (-0.5 * -1.5 * -2.5 / 6.0) * 1.5f64.powf(-3.5);
        assert!((third - expect).abs() < 1e-12);
        let g = f.mul(&f).mul(&d);
        assert!((g.value() - 1.0).abs() < 1e-12);
        assert!(g.derivative(1).coeffs.iter().all(|c| c.abs() < 1e-12));
    }
}
