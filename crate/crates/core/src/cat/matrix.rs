use std::fmt;

use serde::{Deserialize, Serialize};

use super::{CatError, CatResult, MonoidalCategory, Mor, MorphismScope, Obj};

/// Largest declared object scope for the Boolean-matrix category. Hom sets
/// have size `2^(m·n)`, so anything beyond this is only reachable lazily.
pub const MAX_BOOL_DIMENSION: u32 = 3;

/// Hom sets with at most this many entries are enumerable.
const MAX_ENUMERABLE_ENTRIES: u32 = 12;

/// A Boolean matrix stored row-major with each row packed into `u64` words.
/// A morphism `m -> n` is an `n × m` matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoolMatrix {
    rows: u32,
    cols: u32,
    words: Vec<u64>,
}

impl fmt::Debug for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for BoolMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ";")?;
            }
            for j in 0..self.cols {
                write!(f, "{}", if self.get(i, j) { '1' } else { '0' })?;
            }
        }
        write!(f, "]")
    }
}

impl BoolMatrix {
    fn words_per_row(cols: u32) -> usize {
        (cols as usize).div_ceil(64)
    }

    pub fn zeros(rows: u32, cols: u32) -> Self {
        BoolMatrix {
            rows,
            cols,
            words: vec![0; rows as usize * Self::words_per_row(cols)],
        }
    }

    pub fn identity(n: u32) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[&[bool]]) -> Self {
        let r = rows.len() as u32;
        let c = rows.first().map_or(0, |row| row.len()) as u32;
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len() as u32, c, "ragged matrix");
            for (j, &b) in row.iter().enumerate() {
                m.set(i as u32, j as u32, b);
            }
        }
        m
    }

    /// Matrix whose entry `(i, j)` is bit `i * cols + j` of `bits`.
    pub fn from_bits(rows: u32, cols: u32, bits: u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, bits >> (i * cols + j) & 1 == 1);
            }
        }
        m
    }

    /// The matrix of the map sending basis vector `k` of the domain to basis
    /// vector `perm[k]` of the codomain.
    pub fn from_function(cod: u32, perm: &[u32]) -> Self {
        let mut m = Self::zeros(cod, perm.len() as u32);
        for (k, &p) in perm.iter().enumerate() {
            m.set(p, k as u32, true);
        }
        m
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn get(&self, i: u32, j: u32) -> bool {
        let w = Self::words_per_row(self.cols);
        self.words[i as usize * w + j as usize / 64] >> (j % 64) & 1 == 1
    }

    pub fn set(&mut self, i: u32, j: u32, b: bool) {
        let w = Self::words_per_row(self.cols);
        let word = &mut self.words[i as usize * w + j as usize / 64];
        if b {
            *word |= 1 << (j % 64);
        } else {
            *word &= !(1 << (j % 64));
        }
    }

    fn row(&self, i: u32) -> &[u64] {
        let w = Self::words_per_row(self.cols);
        &self.words[i as usize * w..(i as usize + 1) * w]
    }

    /// Boolean product `self · rhs`.
    pub fn mul(&self, rhs: &BoolMatrix) -> Option<BoolMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        let w = Self::words_per_row(rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.get(i, k) {
                    let src = rhs.row(k);
                    let dst = &mut out.words[i as usize * w..(i as usize + 1) * w];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d |= s;
                    }
                }
            }
        }
        Some(out)
    }

    pub fn kronecker(&self, rhs: &BoolMatrix) -> BoolMatrix {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                if !self.get(i1, j1) {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        if rhs.get(i2, j2) {
                            out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, true);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// A permutation matrix has exactly one `1` in every row and column.
    pub fn is_permutation(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).filter(|&j| self.get(i, j)).count() == 1)
            && (0..self.cols).all(|j| (0..self.rows).filter(|&i| self.get(i, j)).count() == 1)
    }

    /// Cup `1 -> n ⊗ n`, the identity pairing as a column vector.
    pub fn cup(n: u32) -> BoolMatrix {
        let mut m = Self::zeros(n * n, 1);
        for i in 0..n {
            m.set(i * n + i, 0, true);
        }
        m
    }

    /// Cap `n ⊗ n -> 1`.
    pub fn cap(n: u32) -> BoolMatrix {
        Self::cup(n).transpose()
    }

    /// Symmetry `m ⊗ n -> n ⊗ m` reordering Kronecker indices.
    pub fn swap(m: u32, n: u32) -> BoolMatrix {
        let perm: Vec<u32> = (0..m * n).map(|k| (k % n) * m + k / n).collect();
        Self::from_function(m * n, &perm)
    }
}

/// The category of finite-dimensional Boolean matrices: objects are
/// dimensions, composition is the Boolean product, tensor is the Kronecker
/// product. Quantification uses the objects `0..=max_dim`.
#[derive(Debug, Clone)]
pub struct BoolMatrixCategory {
    max_dim: u32,
    extra_generators: Vec<BoolMatrix>,
}

impl BoolMatrixCategory {
    pub fn new(max_dim: u32) -> CatResult<Self> {
        if max_dim > MAX_BOOL_DIMENSION {
            return Err(CatError::ScopeTooLarge(format!(
                "Boolean-matrix scope {max_dim} exceeds {MAX_BOOL_DIMENSION}"
            )));
        }
        let mut extra_generators = Vec::new();
        for n in 0..=max_dim {
            extra_generators.push(BoolMatrix::cup(n));
            extra_generators.push(BoolMatrix::cap(n));
            for m in 0..=max_dim {
                extra_generators.push(BoolMatrix::swap(m, n));
            }
        }
        Ok(BoolMatrixCategory {
            max_dim,
            extra_generators,
        })
    }

    pub fn max_dim(&self) -> u32 {
        self.max_dim
    }

    fn matrix<'a>(&self, f: &'a Mor) -> CatResult<&'a BoolMatrix> {
        match f {
            Mor::Matrix(m) => Ok(m),
            Mor::Table(_) => Err(CatError::ForeignMorphism {
                category: self.name(),
            }),
        }
    }

    /// Every matrix `a -> b`, in order of the bit encoding.
    pub fn enumerate(a: u32, b: u32) -> Vec<BoolMatrix> {
        let n = a * b;
        (0..1u64 << n)
            .map(|bits| BoolMatrix::from_bits(b, a, bits))
            .collect()
    }
}

impl MonoidalCategory for BoolMatrixCategory {
    fn name(&self) -> String {
        format!("bool:{}", self.max_dim)
    }

    fn objects(&self) -> Vec<Obj> {
        (0..=self.max_dim).map(Obj).collect()
    }

    fn contains_obj(&self, _x: Obj) -> bool {
        true
    }

    fn unit(&self) -> Obj {
        Obj(1)
    }

    fn tensor_obj(&self, a: Obj, b: Obj) -> CatResult<Obj> {
        a.0.checked_mul(b.0)
            .map(Obj)
            .ok_or_else(|| CatError::ScopeTooLarge(format!("dimension {a} ⊗ {b} overflows")))
    }

    fn dom(&self, f: &Mor) -> CatResult<Obj> {
        Ok(Obj(self.matrix(f)?.cols))
    }

    fn cod(&self, f: &Mor) -> CatResult<Obj> {
        Ok(Obj(self.matrix(f)?.rows))
    }

    fn identity(&self, x: Obj) -> CatResult<Mor> {
        Ok(Mor::Matrix(BoolMatrix::identity(x.0)))
    }

    fn compose(&self, g: &Mor, f: &Mor) -> CatResult<Mor> {
        let (gm, fm) = (self.matrix(g)?, self.matrix(f)?);
        gm.mul(fm).map(Mor::Matrix).ok_or_else(|| {
            CatError::TypeMismatch(format!(
                "cannot compose {} after {}: codomain {} != domain {}",
                gm, fm, fm.rows, gm.cols
            ))
        })
    }

    fn tensor_mor(&self, f: &Mor, g: &Mor) -> CatResult<Mor> {
        Ok(Mor::Matrix(self.matrix(f)?.kronecker(self.matrix(g)?)))
    }

    fn hom(&self, a: Obj, b: Obj) -> Option<Vec<Mor>> {
        if a.0.checked_mul(b.0)? > MAX_ENUMERABLE_ENTRIES {
            return None;
        }
        Some(
            Self::enumerate(a.0, b.0)
                .into_iter()
                .map(Mor::Matrix)
                .collect(),
        )
    }

    fn morphism_scope(&self) -> (Vec<Mor>, MorphismScope) {
        let small = self.max_dim.min(2);
        let mut out: Vec<BoolMatrix> = Vec::new();
        for a in 0..=small {
            for b in 0..=small {
                out.extend(Self::enumerate(a, b));
            }
        }
        for n in 0..=self.max_dim {
            out.push(BoolMatrix::identity(n));
        }
        out.extend(self.extra_generators.iter().cloned());
        let mut seen = std::collections::HashSet::new();
        out.retain(|m| seen.insert(m.clone()));
        (
            out.into_iter().map(Mor::Matrix).collect(),
            MorphismScope::Generators,
        )
    }

    fn mor_label(&self, f: &Mor) -> String {
        match f {
            Mor::Matrix(m) => m.to_string(),
            Mor::Table(id) => format!("<foreign #{id}>"),
        }
    }

    fn try_inverse(&self, f: &Mor) -> Option<Mor> {
        let m = self.matrix(f).ok()?;
        // Over the Boolean semiring the invertible matrices are the permutations.
        m.is_permutation().then(|| Mor::Matrix(m.transpose()))
    }

    fn is_table(&self) -> bool {
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_is_strictly_associative() {
        let a = BoolMatrix::from_bits(2, 2, 0b1011);
        let b = BoolMatrix::from_bits(1, 3, 0b101);
        let c = BoolMatrix::from_bits(2, 1, 0b10);
        assert_eq!(a.kronecker(&b).kronecker(&c), a.kronecker(&b.kronecker(&c)));
    }

    #[test]
    fn swap_reorders_kronecker_factors() {
        let f = BoolMatrix::from_bits(2, 2, 0b0110);
        let g = BoolMatrix::from_bits(3, 3, 0b100_010_011);
        let s_dom = BoolMatrix::swap(2, 3);
        let s_cod = BoolMatrix::swap(2, 3);
        // swap ∘ (f ⊗ g) = (g ⊗ f) ∘ swap
        assert_eq!(s_cod.mul(&f.kronecker(&g)), g.kronecker(&f).mul(&s_dom));
        assert!(s_dom.is_permutation());
    }

    #[test]
    fn hom_enumeration_respects_limit() {
        let c = BoolMatrixCategory::new(3).unwrap();
        assert_eq!(c.hom(Obj(2), Obj(2)).unwrap().len(), 16);
        assert_eq!(c.hom(Obj(2), Obj(3)).unwrap().len(), 64);
        assert!(c.hom(Obj(4), Obj(4)).is_none());
    }

    #[test]
    fn scope_guard() {
        assert!(matches!(
            BoolMatrixCategory::new(4),
            Err(CatError::ScopeTooLarge(_))
        ));
    }

    #[test]
    fn permutations_invert_by_transpose() {
        let c = BoolMatrixCategory::new(2).unwrap();
        let s = Mor::Matrix(BoolMatrix::swap(2, 3));
        let inv = c.try_inverse(&s).unwrap();
        assert_eq!(c.compose(&inv, &s).unwrap(), c.identity(Obj(6)).unwrap());
        assert!(c
            .try_inverse(&Mor::Matrix(BoolMatrix::from_bits(2, 2, 0b1111)))
            .is_none());
    }
}
