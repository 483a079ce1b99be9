//! Exact integer linear algebra on small dense matrices.
//!
//! Everything works over the integers with `i128` entries. Arithmetic is
//! checked and panics on overflow; at desk scale an overflow is a defect,
//! not an input condition.

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i128>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

fn mul_i128(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("integer overflow in exact linear algebra")
}

fn add_i128(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("integer overflow in exact linear algebra")
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i128>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[i128]> {
        (0..self.rows).map(|i| self.row(i))
    }

    pub fn col(&self, j: usize) -> Vec<i128> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = add_i128(out[(i, j)], mul_i128(a, other[(k, j)]));
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[i128]) -> Vec<i128> {
        assert_eq!(self.cols, x.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0i128, |acc, (&a, &b)| add_i128(acc, mul_i128(a, b)))
            })
            .collect()
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "dimension mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "dimension mismatch in hstack");
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                out[(i, self.cols + j)] = other[(i, j)];
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i += q * row_j
    fn add_row(&mut self, i: usize, j: usize, q: i128) {
        for c in 0..self.cols {
            let v = mul_i128(q, self[(j, c)]);
            self[(i, c)] = add_i128(self[(i, c)], v);
        }
    }

    /// col_i += q * col_j
    fn add_col(&mut self, i: usize, j: usize, q: i128) {
        for r in 0..self.rows {
            let v = mul_i128(q, self[(r, j)]);
            self[(r, i)] = add_i128(self[(r, i)], v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            self[(i, c)] = -self[(i, c)];
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in 0..self.rows {
            self[(r, j)] = -self[(r, j)];
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-style Hermite normal form: the unique row-echelon basis of the row
/// lattice with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn row_hnf(m: &Mat) -> Mat {
    let mut h = m.clone();
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        // Euclid on the entries of this column at rows >= pivot_row.
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..h.rows {
                let v = h[(i, col)];
                if v != 0 && best.map_or(true, |b| v.abs() < h[(b, col)].abs()) {
                    best = Some(i);
                }
            }
            let Some(b) = best else { break };
            h.swap_rows(pivot_row, b);
            if h[(pivot_row, col)] < 0 {
                h.negate_row(pivot_row);
            }
            let p = h[(pivot_row, col)];
            let mut clean = true;
            for i in pivot_row + 1..h.rows {
                let q = h[(i, col)].div_euclid(p);
                if q != 0 {
                    h.add_row(i, pivot_row, -q);
                }
                if h[(i, col)] != 0 {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if h[(pivot_row, col)] != 0 {
            let p = h[(pivot_row, col)];
            for i in 0..pivot_row {
                let q = h[(i, col)].div_euclid(p);
                if q != 0 {
                    h.add_row(i, pivot_row, -q);
                }
            }
            pivot_row += 1;
        }
    }
    let rows: Vec<Vec<i128>> = (0..pivot_row).map(|i| h.row(i).to_vec()).collect();
    if rows.is_empty() {
        Mat::zeros(0, m.cols)
    } else {
        Mat::from_rows(rows)
    }
}

/// Basis of the left kernel `{ u : u * m = 0 }`, as rows.
pub fn left_kernel(m: &Mat) -> Mat {
    let aug = m.hstack(&Mat::identity(m.rows));
    let h = row_hnf(&aug);
    let mut rows = Vec::new();
    for i in 0..h.rows {
        if (0..m.cols).all(|j| h[(i, j)] == 0) {
            rows.push(h.row(i)[m.cols..].to_vec());
        }
    }
    if rows.is_empty() {
        Mat::zeros(0, m.rows)
    } else {
        Mat::from_rows(rows)
    }
}

/// Smith normal form `u * m * v = s` with tracked unimodular transforms and
/// their inverses.
pub struct Snf {
    pub u: Mat,
    pub s: Mat,
    pub v: Mat,
    pub u_inv: Mat,
    pub v_inv: Mat,
}

pub fn smith(m: &Mat) -> Snf {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = Mat::identity(r);
    let mut u_inv = Mat::identity(r);
    let mut v = Mat::identity(c);
    let mut v_inv = Mat::identity(c);

    // S <- E*S: track U <- E*U, U_inv <- U_inv*E^{-1}.
    // S <- S*E: track V <- V*E, V_inv <- E^{-1}*V_inv.
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            s.swap_rows($i, $j);
            u.swap_rows($i, $j);
            u_inv.swap_cols($i, $j);
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            s.swap_cols($i, $j);
            v.swap_cols($i, $j);
            v_inv.swap_rows($i, $j);
        }};
    }
    // row_i += q*row_j
    macro_rules! row_add {
        ($i:expr, $j:expr, $q:expr) => {{
            let q = $q;
            s.add_row($i, $j, q);
            u.add_row($i, $j, q);
            u_inv.add_col($j, $i, -q);
        }};
    }
    // col_j += q*col_i
    macro_rules! col_add {
        ($j:expr, $i:expr, $q:expr) => {{
            let q = $q;
            s.add_col($j, $i, q);
            v.add_col($j, $i, q);
            v_inv.add_row($i, $j, -q);
        }};
    }

    let n = r.min(c);
    let mut t = 0;
    while t < n {
        // Locate the smallest nonzero entry in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                let val = s[(i, j)];
                if val != 0 && best.map_or(true, |(bi, bj)| val.abs() < s[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        row_swap!(t, bi);
        col_swap!(t, bj);
        if s[(t, t)] < 0 {
            s.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }

        let mut dirty = false;
        for i in t + 1..r {
            let q = s[(i, t)].div_euclid(s[(t, t)]);
            if q != 0 {
                row_add!(i, t, -q);
            }
            if s[(i, t)] != 0 {
                dirty = true;
            }
        }
        for j in t + 1..c {
            let q = s[(t, j)].div_euclid(s[(t, t)]);
            if q != 0 {
                col_add!(j, t, -q);
            }
            if s[(t, j)] != 0 {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }

        // Pivot divides its row and column; enforce divisibility of the rest.
        let p = s[(t, t)];
        let offender = (t + 1..r)
            .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
            .find(|&(i, j)| s[(i, j)] % p != 0);
        if let Some((i, _)) = offender {
            row_add!(t, i, 1);
            continue;
        }
        t += 1;
    }
    Snf { u, s, v, u_inv, v_inv }
}

/// One integer solution `x` of `a * x = b`, if any.
pub fn solve(a: &Mat, b: &[i128]) -> Option<Vec<i128>> {
    PreparedSolver::new(a).solve(b)
}

/// A Smith decomposition kept around for repeated solves against the same
/// matrix.
pub struct PreparedSolver {
    rows: usize,
    cols: usize,
    snf: Snf,
}

impl PreparedSolver {
    pub fn new(a: &Mat) -> PreparedSolver {
        PreparedSolver { rows: a.rows, cols: a.cols, snf: smith(a) }
    }

    pub fn solve(&self, b: &[i128]) -> Option<Vec<i128>> {
        assert_eq!(self.rows, b.len(), "dimension mismatch in solve");
        let ub = self.snf.u.mul_vec(b);
        let mut y = vec![0i128; self.cols];
        for i in 0..self.rows {
            let d = if i < self.cols { self.snf.s[(i, i)] } else { 0 };
            if d == 0 {
                if ub[i] != 0 {
                    return None;
                }
            } else {
                if ub[i] % d != 0 {
                    return None;
                }
                y[i] = ub[i] / d;
            }
        }
        Some(self.snf.v.mul_vec(&y))
    }
}
