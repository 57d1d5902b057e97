//! Correctly rounded sums of products.
//!
//! Each product is split exactly into `p + e` with a fused multiply-add and
//! the pieces are accumulated as non-overlapping partials, so the result is
//! the exact sum rounded once.

/// Correctly rounded `Σ a_i b_i`. Finite inputs only.
pub fn dot_sum(terms: impl IntoIterator<Item = (f64, f64)>) -> f64 {
    let mut acc = Partials::default();
    for (a, b) in terms {
        let p = a * b;
        acc.add(p);
        acc.add(a.mul_add(b, -p));
    }
    acc.round()
}

/// Correctly rounded `Σ x_i`.
pub fn sum(terms: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = Partials::default();
    for x in terms {
        acc.add(x);
    }
    acc.round()
}

/// Non-overlapping expansion in increasing magnitude.
#[derive(Default)]
struct Partials(Vec<f64>);

impl Partials {
    fn add(&mut self, mut x: f64) {
        let mut kept = 0;
        for i in 0..self.0.len() {
            let mut y = self.0[i];
            if x.abs() < y.abs() {
                std::mem::swap(&mut x, &mut y);
            }
            let hi = x + y;
            let lo = y - (hi - x);
            if lo != 0.0 {
                self.0[kept] = lo;
                kept += 1;
            }
            x = hi;
        }
        self.0.truncate(kept);
        self.0.push(x);
    }

    fn round(&self) -> f64 {
        let p = &self.0;
        let Some(mut n) = p.len().checked_sub(1) else {
            return 0.0;
        };
        let mut hi = p[n];
        let mut lo = 0.0;
        while n > 0 {
            n -= 1;
            let x = hi;
            let y = p[n];
            hi = x + y;
            let yr = hi - x;
            lo = y - yr;
            if lo != 0.0 {
                break;
            }
        }
        // a half-way tie in `hi + lo` is broken by the sign of the rest
        if n > 0 && ((lo < 0.0 && p[n - 1] < 0.0) || (lo > 0.0 && p[n - 1] > 0.0)) {
            let y = lo * 2.0;
            let x = hi + y;
            if y == x - hi {
                hi = x;
            }
        }
        hi
    }
}
