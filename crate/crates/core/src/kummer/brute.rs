use super::coeffs::KummerCoeffs;

/// Result of scanning P³(F_p) exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceCounts {
    pub p: u32,
    /// Number of points visited: p³ + p² + p + 1.
    pub scanned: u64,
    /// #Q(F_p).
    pub points: u64,
    /// Singular F_p-points whose Hessian has rank exactly 3 (ordinary double points).
    pub rational_nodes: Vec<[u32; 4]>,
    /// Singular F_p-points of any kind.
    pub singular: u64,
}

impl SurfaceCounts {
    /// True when every rational singular point is an ordinary double point and
    /// there are no more than sixteen of them.
    pub fn looks_good(&self) -> bool {
        self.singular == self.rational_nodes.len() as u64 && self.singular <= 16
    }
}

/// Direct evaluator for F = 16k·xyzw − φ², its gradient and Hessian.
struct Evaluator {
    p: i64,
    m: [[i64; 4]; 4],
    k16: i64,
}

impl Evaluator {
    fn new(c: &KummerCoeffs, p: u32) -> Self {
        let p = p as i64;
        let mut m = c.phi_matrix();
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = e.rem_euclid(p);
            }
        }
        Evaluator { p, m, k16: (16 * c.k_value()).rem_euclid(p) }
    }

    /// Returns (F, ∇F, φ, ∇φ/2) at v.
    fn jet(&self, v: &[i64; 4]) -> (i64, [i64; 4], i64, [i64; 4]) {
        let p = self.p;
        let mut half_grad = [0i64; 4];
        for i in 0..4 {
            half_grad[i] = (0..4).map(|j| self.m[i][j] * v[j]).sum::<i64>() % p;
        }
        let phi = (0..4).map(|i| v[i] * half_grad[i]).sum::<i64>() % p;
        let prod = |skip: usize| (0..4).filter(|&j| j != skip).fold(1i64, |a, j| a * v[j] % p);
        let xyzw = v[0] * prod(0) % p;
        let f = (self.k16 * xyzw - phi * phi).rem_euclid(p);
        let mut g = [0i64; 4];
        for i in 0..4 {
            // d(φ²)/dx_i = 2φ·dφ/dx_i = 4φ·half_grad_i
            g[i] = (self.k16 * prod(i) - 4 * phi % p * half_grad[i]).rem_euclid(p);
        }
        (f, g, phi, half_grad)
    }

    fn hessian_rank(&self, v: &[i64; 4]) -> usize {
        let p = self.p;
        let (_, _, phi, hg) = self.jet(v);
        let mut h = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                let quart = if i == j {
                    0
                } else {
                    (0..4).filter(|&l| l != i && l != j).fold(1i64, |a, l| a * v[l] % p)
                };
                // d²(φ²) = 2(dφ_i dφ_j + φ d²φ_ij) with dφ = 2·hg, d²φ = 2m
                let t = 8 * hg[i] % p * hg[j] % p + 4 * phi % p * self.m[i][j] % p;
                h[i][j] = (self.k16 * quart - t).rem_euclid(p);
            }
        }
        rank_mod_p(h, p)
    }
}

fn rank_mod_p(mut a: [[i64; 4]; 4], p: i64) -> usize {
    let inv = |x: i64| {
        let mut r = 1i64;
        let mut b = x;
        let mut e = p - 2;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for col in 0..4 {
        let Some(piv) = (rank..4).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, piv);
        let iv = inv(a[rank][col]);
        for r in 0..4 {
            if r != rank && a[r][col] != 0 {
                let f = a[r][col] * iv % p;
                for c in 0..4 {
                    a[r][c] = (a[r][c] - f * a[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Normalized representatives of P³(F_p): first nonzero coordinate is 1.
pub fn projective_points(p: u32) -> impl Iterator<Item = [u32; 4]> {
    (0..4usize).rev().flat_map(move |lead| {
        // lead = number of trailing free coordinates
        let n = (p as u64).pow(lead as u32);
        (0..n).map(move |mut idx| {
            let mut v = [0u32; 4];
            let first = 3 - lead;
            v[first] = 1;
            for slot in (first + 1..4).rev() {
                v[slot] = (idx % p as u64) as u32;
                idx /= p as u64;
            }
            v
        })
    })
}

/// Exhaustive point and singularity count of Q_[a,b,c] over F_p.
pub fn brute_force_surface_counts(coeffs: &KummerCoeffs, p: u32) -> SurfaceCounts {
    let ev = Evaluator::new(coeffs, p);
    let mut out = SurfaceCounts { p, scanned: 0, points: 0, rational_nodes: Vec::new(), singular: 0 };
    for v in projective_points(p) {
        out.scanned += 1;
        let vi = v.map(|x| x as i64);
        let (f, g, _, _) = ev.jet(&vi);
        if f != 0 {
            continue;
        }
        out.points += 1;
        if g.iter().all(|&x| x == 0) {
            out.singular += 1;
            if ev.hessian_rank(&vi) == 3 {
                out.rational_nodes.push(v);
            }
        }
    }
    out
}
