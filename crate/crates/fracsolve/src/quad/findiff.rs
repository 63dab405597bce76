//! Finite-difference weights on arbitrary stencils (Fornberg's algorithm).

/// Weights w_i such that f^{(m)}(x0) ≈ Σ w_i f(x_i).
///
/// `nodes` must be pairwise distinct; accuracy order is
/// `nodes.len() - m` (one better on symmetric stencils).
pub fn fd_weights(nodes: &[f64], x0: f64, m: usize) -> Vec<f64> {
    let n = nodes.len();
    assert!(n > m, "need more than m nodes for the m-th derivative");
    let mut c = vec![vec![0.0f64; m + 1]; n];
    let mut c1 = 1.0;
    let mut c4 = nodes[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = nodes[i] - x0;
        for j in 0..i {
            let c3 = nodes[i] - nodes[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[i][k] = c1 * (k as f64 * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
                }
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            for k in (1..=mn).rev() {
                c[j][k] = (c4 * c[j][k] - k as f64 * c[j][k - 1]) / c3;
            }
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    c.into_iter().map(|row| row[m]).collect()
}

/// Symmetric integer-offset stencil `-halfwidth..=halfwidth`, optionally
/// without the center node (odd derivatives have zero center weight anyway).
pub fn central_offsets(halfwidth: usize) -> Vec<f64> {
    (-(halfwidth as i64)..=halfwidth as i64)
        .map(|k| k as f64)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_weights(got: &[f64], expect: &[f64]) {
        assert_eq!(got.len(), expect.len());
        for (g, e) in got.iter().zip(expect) {
            assert!((g - e).abs() < 1e-12, "weights {got:?} vs {expect:?}");
        }
    }

    #[test]
    fn classic_stencils() {
        // 4th-order first derivative
        let w = fd_weights(&central_offsets(2), 0.0, 1);
        assert_weights(&w, &[1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0]);
        // 4th-order second derivative
        let w = fd_weights(&central_offsets(2), 0.0, 2);
        assert_weights(
            &w,
            &[-1.0 / 12.0, 4.0 / 3.0, -5.0 / 2.0, 4.0 / 3.0, -1.0 / 12.0],
        );
    }

    #[test]
    fn high_order_derivative_of_power() {
        // d⁴/dx⁴ x⁶ at x = 1.3 is 360 x² = 608.4; 11-node stencil, h = 0.1.
        let h = 0.1;
        let nodes: Vec<f64> = central_offsets(5).iter().map(|k| 1.3 + k * h).collect();
        let w = fd_weights(&nodes, 1.3, 4);
        let val: f64 = nodes
            .iter()
            .zip(&w)
            .map(|(&x, &wi)| wi * x.powi(6))
            .sum();
        assert!((val - 360.0 * 1.3f64.powi(2)).abs() < 1e-6, "got {val}");
    }
}
