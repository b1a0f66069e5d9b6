//! Reference data shared by the integration suites.

use qpart_core::IntPolynomial;

fn poly(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64s(c)
}

/// `coef * a^deg` terms.
fn terms(t: &[(i64, usize)]) -> IntPolynomial {
    t.iter()
        .map(|&(c, d)| IntPolynomial::monomial(c, d))
        .fold(IntPolynomial::zero(), |acc, m| &acc + &m)
}

pub fn published_c_table() -> Vec<IntPolynomial> {
    vec![
        poly(&[1]),
        poly(&[-1]),
        poly(&[1, 1]),
        poly(&[-1, -2]),
        poly(&[1, 3, 1]),
        poly(&[-1, -4, -3, 1]),
        poly(&[1, 5, 6, -1]),
        poly(&[0, 1, 4, -1, -5]),
        terms(&[(1, 2), (6, 3), (2, 4)]),
        terms(&[(-1, 3), (-4, 5)]),
        terms(&[(1, 3), (2, 4), (3, 5), (1, 6)]),
        terms(&[(2, 4), (3, 5), (-6, 6)]),
        terms(&[(3, 5), (8, 6), (-4, 7)]),
        terms(&[(1, 6)]),
        terms(&[(1, 6), (6, 8)]),
        terms(&[(3, 7), (-3, 8), (1, 9)]),
        terms(&[(6, 8), (-1, 9)]),
        terms(&[(6, 9), (-3, 10)]),
        terms(&[(1, 9), (2, 10)]),
        terms(&[(4, 10), (3, 11)]),
        terms(&[(-4, 11), (1, 12)]),
        terms(&[(1, 12)]),
        terms(&[(1, 12), (-2, 13)]),
        terms(&[(5, 13)]),
        terms(&[(1, 14)]),
        terms(&[(1, 15)]),
        terms(&[(1, 15)]),
        terms(&[(-1, 16)]),
        IntPolynomial::zero(),
        IntPolynomial::zero(),
        terms(&[(1, 18)]),
    ]
}
