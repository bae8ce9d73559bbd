//! Seifert-matrix oracle for Alexander polynomials, kept independent of the
//! Laurent polynomial arithmetic in the core crate.

/// Integer polynomial in `t`, lowest degree first.
pub type Poly = Vec<i64>;

fn add(a: &[i64], b: &[i64]) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        out[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        out[i] += v;
    }
    out
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn det(m: &[Vec<Poly>]) -> Poly {
    match m.len() {
        0 => vec![1],
        1 => m[0][0].clone(),
        n => {
            let mut total = Vec::new();
            for j in 0..n {
                let minor: Vec<Vec<Poly>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let mut term = mul(&m[0][j], &det(&minor));
                if j % 2 == 1 {
                    term.iter_mut().for_each(|c| *c = -*c);
                }
                total = add(&total, &term);
            }
            total
        }
    }
}

/// Drops zero coefficients at both ends and makes the leading one positive.
pub fn normalize(p: &[i64]) -> Poly {
    let Some(first) = p.iter().position(|&c| c != 0) else {
        return Vec::new();
    };
    let last = p.iter().rposition(|&c| c != 0).expect("nonzero entry exists");
    let mut out = p[first..=last].to_vec();
    if out[out.len() - 1] < 0 {
        out.iter_mut().for_each(|c| *c = -*c);
    }
    out
}

/// `det(V - t·Vᵀ)`, normalized.
pub fn seifert_alexander(v: &[Vec<i64>]) -> Poly {
    let n = v.len();
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| (0..n).map(|j| vec![v[i][j], -v[j][i]]).collect())
        .collect();
    normalize(&det(&m))
}

/// Seifert matrices of the torus knots `T(2, 2k+1)`: `-I` plus ones just
/// above the diagonal, size `2k`.
pub fn torus_seifert(size: usize) -> Vec<Vec<i64>> {
    (0..size)
        .map(|i| {
            (0..size)
                .map(|j| match j as i64 - i as i64 {
                    0 => -1,
                    1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Catalog knots with a known Seifert matrix and a braid presentation.
pub fn seifert_catalog() -> Vec<(&'static str, &'static str, Vec<Vec<i64>>)> {
    vec![
        ("trefoil", "s1 s1 s1", vec![vec![-1, 1], vec![0, -1]]),
        ("figure8", "s1 s2' s1 s2'", vec![vec![1, 1], vec![0, -1]]),
        ("T25", "s1 s1 s1 s1 s1", torus_seifert(4)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(seifert_alexander(&[vec![-1, 1], vec![0, -1]]), vec![1, -1, 1]);
        assert_eq!(seifert_alexander(&[vec![1, 1], vec![0, -1]]), vec![1, -3, 1]);
        assert_eq!(seifert_alexander(&torus_seifert(4)), vec![1, -1, 1, -1, 1]);
        assert_eq!(normalize(&[0, 0, -2, 0]), vec![2]);
    }
}
