//! Cochains and coboundary operators in degrees 0 to 2 for Lie algebras
//! (Chevalley-Eilenberg) and 3-Lie algebras, with adjoint or scalar
//! coefficients, plus the derivation and 2-cocycle transfer statements.
//!
//! A Lie `p`-cochain is stored on increasing `p`-tuples. A 3-Lie `p`-cochain
//! takes `p−1` skew pairs followed by one more argument; its keys are
//! `(i₁<j₁, …, i_{p−1}<j_{p−1}, k)` flattened into one index list.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{increasing_tuples, one_based, sort_with_sign, StructureConstants};
use crate::error::{Error, LiftCondition, Result};
use crate::exactlin::{axpy, is_zero_vector, nullspace, unit_vector, Matrix, Rational, Subspace};
use crate::induce::{check_trace, induce_bracket, LinearForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theory {
    Lie,
    TriLie,
}

impl Theory {
    pub fn name(self) -> &'static str {
        match self {
            Theory::Lie => "lie",
            Theory::TriLie => "trilie",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Theory::Lie => 2,
            Theory::TriLie => 3,
        }
    }

    /// Number of arguments of a degree-`p` cochain.
    pub fn arg_count(self, degree: usize) -> usize {
        match self {
            Theory::Lie => degree,
            Theory::TriLie => 2 * degree - 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeffs {
    Adjoint,
    Scalar,
}

impl Coeffs {
    pub fn name(self) -> &'static str {
        match self {
            Coeffs::Adjoint => "adjoint",
            Coeffs::Scalar => "scalar",
        }
    }

    pub fn value_dim(self, dim: usize) -> usize {
        match self {
            Coeffs::Adjoint => dim,
            Coeffs::Scalar => 1,
        }
    }
}

/// Canonical keys of degree-`p` cochains, in lexicographic order.
pub fn cochain_keys(theory: Theory, degree: usize, dim: usize) -> Vec<Vec<usize>> {
    match theory {
        Theory::Lie => increasing_tuples(dim, degree),
        Theory::TriLie => {
            if degree == 0 {
                return Vec::new();
            }
            let pairs = increasing_tuples(dim, 2);
            let mut keys: Vec<Vec<usize>> = vec![Vec::new()];
            for _ in 1..degree {
                keys = keys
                    .into_iter()
                    .flat_map(|k| {
                        pairs.iter().map(move |p| {
                            let mut k = k.clone();
                            k.extend(p);
                            k
                        })
                    })
                    .collect();
            }
            keys.into_iter()
                .flat_map(|k| {
                    (0..dim).map(move |i| {
                        let mut k = k.clone();
                        k.push(i);
                        k
                    })
                })
                .collect()
        }
    }
}

/// Canonical key and sign for basis arguments, or `None` when a skew block
/// repeats an index.
fn canonical_key(theory: Theory, indices: &[usize]) -> Option<(Vec<usize>, bool)> {
    match theory {
        Theory::Lie => sort_with_sign(indices),
        Theory::TriLie => {
            let (pairs, last) = indices.split_at(indices.len().checked_sub(1)?);
            let mut key = Vec::with_capacity(indices.len());
            let mut odd = false;
            for pair in pairs.chunks(2) {
                let (sorted, flip) = sort_with_sign(pair)?;
                key.extend(sorted);
                odd ^= flip;
            }
            key.extend(last);
            Some((key, odd))
        }
    }
}

/// Sum over the supports of `args` of `coefficient · basis(indices)`.
fn multilinear<F>(args: &[&[Rational]], out_dim: usize, basis: F) -> Vec<Rational>
where
    F: Fn(&[usize]) -> Option<Vec<Rational>>,
{
    fn go<F: Fn(&[usize]) -> Option<Vec<Rational>>>(
        args: &[&[Rational]],
        supports: &[Vec<usize>],
        idx: &mut Vec<usize>,
        coeff: Rational,
        basis: &F,
        out: &mut [Rational],
    ) {
        let slot = idx.len();
        if slot == args.len() {
            if let Some(v) = basis(idx) {
                axpy(out, &coeff, &v);
            }
            return;
        }
        for &i in &supports[slot] {
            idx.push(i);
            go(args, supports, idx, &coeff * &args[slot][i], basis, out);
            idx.pop();
        }
    }
    let supports: Vec<Vec<usize>> = args
        .iter()
        .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
        .collect();
    let mut out = vec![Rational::zero(); out_dim];
    go(args, &supports, &mut Vec::new(), Rational::one(), &basis, &mut out);
    out
}

/// A degree-`p` cochain with adjoint or scalar values.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cochain {
    theory: Theory,
    coeffs: Coeffs,
    degree: usize,
    dim: usize,
    table: BTreeMap<Vec<usize>, Vec<Rational>>,
}

impl Cochain {
    pub fn zero(theory: Theory, coeffs: Coeffs, degree: usize, dim: usize) -> Self {
        Self { theory, coeffs, degree, dim, table: BTreeMap::new() }
    }

    /// Builds a cochain from assignments on 1-based basis arguments.
    /// Arguments are reordered within each skew block with the matching sign.
    pub fn from_assignments<I>(
        theory: Theory,
        coeffs: Coeffs,
        degree: usize,
        dim: usize,
        raw: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Vec<Rational>)>,
    {
        let nargs = theory.arg_count(degree);
        let vdim = coeffs.value_dim(dim);
        let mut table = BTreeMap::new();
        for (args, value) in raw {
            if args.len() != nargs {
                return Err(Error::Arity { expected: nargs, got: args.len() });
            }
            if value.len() != vdim {
                return Err(Error::DimensionMismatch { expected: vdim, got: value.len() });
            }
            if let Some(&index) = args.iter().find(|&&i| i == 0 || i > dim) {
                return Err(Error::IndexOutOfRange { index, dim });
            }
            let zero_based: Vec<usize> = args.iter().map(|i| i - 1).collect();
            let Some((key, odd)) = canonical_key(theory, &zero_based) else {
                if is_zero_vector(&value) {
                    continue;
                }
                return Err(Error::Antisymmetry { tuple: args });
            };
            if table.contains_key(&key) {
                return Err(Error::DuplicateDefinition { tuple: args });
            }
            let value = if odd { value.into_iter().map(|x| -x).collect() } else { value };
            table.insert(key, value);
        }
        table.retain(|_, v: &mut Vec<Rational>| !is_zero_vector(v));
        Ok(Self { theory, coeffs, degree, dim, table })
    }

    /// A cochain from its coordinate vector in the layout of [`Cochain::coords`].
    pub fn from_coords(theory: Theory, coeffs: Coeffs, degree: usize, dim: usize, coords: &[Rational]) -> Result<Self> {
        let keys = cochain_keys(theory, degree, dim);
        let vdim = coeffs.value_dim(dim);
        let expected = keys.len() * vdim;
        if coords.len() != expected {
            return Err(Error::DimensionMismatch { expected, got: coords.len() });
        }
        let table = keys
            .into_iter()
            .enumerate()
            .map(|(n, k)| (k, coords[n * vdim..(n + 1) * vdim].to_vec()))
            .filter(|(_, v)| !is_zero_vector(v))
            .collect();
        Ok(Self { theory, coeffs, degree, dim, table })
    }

    /// Degree-1 adjoint cochain whose value on `e_k` is column `k` of `m`.
    pub fn from_linear_map(theory: Theory, m: &Matrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.rows(), got: m.cols() });
        }
        let d = m.cols();
        let t = m.transpose();
        let table = (0..d)
            .map(|k| (vec![k], t.row(k).to_vec()))
            .filter(|(_, v)| !is_zero_vector(v))
            .collect();
        Ok(Self { theory, coeffs: Coeffs::Adjoint, degree: 1, dim: d, table })
    }

    /// Degree-1 scalar cochain given by a linear form.
    pub fn from_form(theory: Theory, form: &LinearForm) -> Self {
        let table = form
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (vec![k], vec![c.clone()]))
            .collect();
        Self { theory, coeffs: Coeffs::Scalar, degree: 1, dim: form.dim(), table }
    }

    pub fn theory(&self) -> Theory {
        self.theory
    }

    pub fn coeffs(&self) -> Coeffs {
        self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn value_dim(&self) -> usize {
        self.coeffs.value_dim(self.dim)
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    /// Nonzero values keyed by canonical 0-based keys.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Rational>)> {
        self.table.iter()
    }

    /// Coordinates: for key number `n` and value coordinate `q`, entry
    /// `n · value_dim + q`. For a degree-1 adjoint cochain this is the
    /// `q`-th coordinate of `f(e_k)`, i.e. `z_{qk}`.
    pub fn coords(&self) -> Vec<Rational> {
        let vdim = self.value_dim();
        let keys = cochain_keys(self.theory, self.degree, self.dim);
        let mut out = Vec::with_capacity(keys.len() * vdim);
        for k in keys {
            match self.table.get(&k) {
                Some(v) => out.extend(v.iter().cloned()),
                None => out.extend(std::iter::repeat(Rational::zero()).take(vdim)),
            }
        }
        out
    }

    /// The `d × d` matrix whose column `k` is `f(e_k)`.
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.degree != 1 || self.coeffs != Coeffs::Adjoint {
            return Err(Error::CochainShape("only degree-1 adjoint cochains are linear maps".into()));
        }
        let d = self.dim;
        let mut m = Matrix::zeros(d, d);
        for (k, v) in &self.table {
            for (q, x) in v.iter().enumerate() {
                m.set(q, k[0], x.clone());
            }
        }
        Ok(m)
    }

    /// Value on basis arguments (0-based, any order within the skew blocks).
    pub fn eval_basis(&self, indices: &[usize]) -> Vec<Rational> {
        let vdim = self.value_dim();
        match canonical_key(self.theory, indices) {
            Some((key, odd)) => match self.table.get(&key) {
                Some(v) if odd => v.iter().map(|x| -x.clone()).collect(),
                Some(v) => v.clone(),
                None => vec![Rational::zero(); vdim],
            },
            None => vec![Rational::zero(); vdim],
        }
    }

    fn lookup(&self, indices: &[usize]) -> Option<Vec<Rational>> {
        let (key, odd) = canonical_key(self.theory, indices)?;
        let v = self.table.get(&key)?;
        Some(if odd { v.iter().map(|x| -x.clone()).collect() } else { v.clone() })
    }

    /// Multilinear evaluation.
    pub fn eval(&self, args: &[&[Rational]]) -> Result<Vec<Rational>> {
        let nargs = self.theory.arg_count(self.degree);
        if args.len() != nargs {
            return Err(Error::Arity { expected: nargs, got: args.len() });
        }
        if let Some(a) = args.iter().find(|a| a.len() != self.dim) {
            return Err(Error::DimensionMismatch { expected: self.dim, got: a.len() });
        }
        Ok(self.eval_unchecked(args))
    }

    fn eval_unchecked(&self, args: &[&[Rational]]) -> Vec<Rational> {
        if self.table.is_empty() {
            return vec![Rational::zero(); self.value_dim()];
        }
        multilinear(args, self.value_dim(), |idx| self.lookup(idx))
    }

    /// Skew-symmetry in all arguments, not only within the pairs. Only
    /// meaningful for 3-Lie degree-2 cochains; Lie cochains are always skew.
    pub fn is_fully_skew(&self) -> bool {
        if self.theory == Theory::Lie {
            return true;
        }
        let n = self.theory.arg_count(self.degree);
        let all: Vec<Vec<usize>> = cochain_keys(self.theory, self.degree, self.dim);
        all.iter().all(|k| {
            (0..n - 1).all(|i| {
                let mut swapped = k.clone();
                swapped.swap(i, i + 1);
                let a = self.eval_basis(k);
                let b = self.eval_basis(&swapped);
                a.iter().zip(&b).all(|(x, y)| (x + y).is_zero())
                    && (k[i] != k[i + 1] || is_zero_vector(&a))
            })
        })
    }

    fn check_matches(&self, other: &Cochain) -> Result<()> {
        if (self.theory, self.coeffs, self.degree) != (other.theory, other.coeffs, other.degree) {
            return Err(Error::CochainShape("cochains of different kinds".into()));
        }
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: other.dim });
        }
        Ok(())
    }

    /// `self + factor · other`.
    pub fn add_scaled(&self, factor: &Rational, other: &Cochain) -> Result<Cochain> {
        self.check_matches(other)?;
        let mut table = self.table.clone();
        for (k, v) in &other.table {
            let slot = table.entry(k.clone()).or_insert_with(|| vec![Rational::zero(); v.len()]);
            axpy(slot, factor, v);
        }
        table.retain(|_, v| !is_zero_vector(v));
        Ok(Cochain { table, ..self.clone() })
    }

    /// Assignments with 1-based arguments in key order.
    pub fn to_raw(&self) -> Vec<(Vec<usize>, Vec<Rational>)> {
        self.table.iter().map(|(k, v)| (one_based(k), v.clone())).collect()
    }
}

impl fmt::Debug for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Cochain({} {} degree {} dim {}) {:?}",
            self.theory.name(),
            self.coeffs.name(),
            self.degree,
            self.dim,
            self.to_raw()
        )
    }
}

fn check_algebra(a: &StructureConstants, theory: Theory) -> Result<()> {
    if a.arity() != theory.arity() {
        return Err(Error::Arity { expected: theory.arity(), got: a.arity() });
    }
    Ok(())
}

fn check_cochain(a: &StructureConstants, c: &Cochain, theory: Theory) -> Result<()> {
    check_algebra(a, theory)?;
    if c.theory != theory {
        return Err(Error::CochainShape(format!("expected a {} cochain", theory.name())));
    }
    if c.dim != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: c.dim });
    }
    Ok(())
}

fn neg(v: Vec<Rational>) -> Vec<Rational> {
    v.into_iter().map(|x| -x).collect()
}

/// Evaluates a coboundary formula on every output key and collects a cochain.
fn collect<F>(theory: Theory, coeffs: Coeffs, degree: usize, dim: usize, value: F) -> Cochain
where
    F: Fn(&[Vec<Rational>]) -> Vec<Rational>,
{
    let table = cochain_keys(theory, degree, dim)
        .into_iter()
        .filter_map(|k| {
            let args: Vec<Vec<Rational>> = k.iter().map(|&i| unit_vector(dim, i)).collect();
            let v = value(&args);
            (!is_zero_vector(&v)).then_some((k, v))
        })
        .collect();
    Cochain { theory, coeffs, degree, dim, table }
}

/// Chevalley-Eilenberg coboundary `δ^p` for `p ∈ {0,1,2}`:
///
/// * `δ⁰m(x) = ρ(x)m`
/// * `δ¹f(x,y) = ρ(x)f(y) − ρ(y)f(x) − f([x,y])`, and `δ¹ω(x,y) = ω([x,y])` for scalars
/// * `δ²φ(x,y,z) = ρ(x)φ(y,z) − ρ(y)φ(x,z) + ρ(z)φ(x,y) − φ([x,y],z) + φ([x,z],y) − φ([y,z],x)`
///
/// with `ρ = ad` (adjoint) or `ρ = 0` (scalar).
pub fn lie_delta(a: &StructureConstants, c: &Cochain) -> Result<Cochain> {
    check_cochain(a, c, Theory::Lie)?;
    let d = a.dim();
    let adjoint = c.coeffs == Coeffs::Adjoint;
    let vdim = c.value_dim();
    let rho = |x: &[Rational], v: &[Rational]| -> Vec<Rational> {
        if adjoint {
            a.bracket_unchecked(&[x, v])
        } else {
            vec![Rational::zero(); vdim]
        }
    };
    let br = |x: &[Rational], y: &[Rational]| a.bracket_unchecked(&[x, y]);
    let one = Rational::one();
    let out = match c.degree {
        0 => collect(Theory::Lie, c.coeffs, 1, d, |v| rho(&v[0], &c.eval_basis(&[]))),
        1 => collect(Theory::Lie, c.coeffs, 2, d, |v| {
            let (x, y) = (&v[0], &v[1]);
            let fxy = c.eval_unchecked(&[&br(x, y)]);
            if !adjoint {
                return fxy;
            }
            let mut out = rho(x, &c.eval_unchecked(&[y]));
            axpy(&mut out, &-one.clone(), &rho(y, &c.eval_unchecked(&[x])));
            axpy(&mut out, &-one.clone(), &fxy);
            out
        }),
        2 => collect(Theory::Lie, c.coeffs, 3, d, |v| {
            let (x, y, z) = (v[0].as_slice(), v[1].as_slice(), v[2].as_slice());
            let mut out = rho(x, &c.eval_unchecked(&[y, z]));
            axpy(&mut out, &-one.clone(), &rho(y, &c.eval_unchecked(&[x, z])));
            axpy(&mut out, &one, &rho(z, &c.eval_unchecked(&[x, y])));
            axpy(&mut out, &-one.clone(), &c.eval_unchecked(&[&br(x, y), z]));
            axpy(&mut out, &one, &c.eval_unchecked(&[&br(x, z), y]));
            axpy(&mut out, &-one.clone(), &c.eval_unchecked(&[&br(y, z), x]));
            out
        }),
        p => return Err(Error::UnsupportedDegree { theory: "lie", degree: p }),
    };
    Ok(out)
}

/// 3-Lie coboundary in degrees 1 and 2:
///
/// * `d¹f(x,y,z) = [f x,y,z] + [x,f y,z] + [x,y,f z] − f([x,y,z])`, and `d¹ω(x,y,z) = ω([x,y,z])` for scalars
/// * `d²ψ(x₁,x₂,y₁,y₂,z) = ψ(x₁,x₂,[y₁,y₂,z]) − ψ([x₁,x₂,y₁],y₂,z) − ψ(y₁,[x₁,x₂,y₂],z) − ψ(y₁,y₂,[x₁,x₂,z])`
///   plus, for adjoint values, `[x₁,x₂,ψ(y₁,y₂,z)] − [ψ(x₁,x₂,y₁),y₂,z] − [y₁,ψ(x₁,x₂,y₂),z] − [y₁,y₂,ψ(x₁,x₂,z)]`
pub fn trilie_d(a: &StructureConstants, c: &Cochain) -> Result<Cochain> {
    check_cochain(a, c, Theory::TriLie)?;
    let d = a.dim();
    let adjoint = c.coeffs == Coeffs::Adjoint;
    let br = |x: &[Rational], y: &[Rational], z: &[Rational]| a.bracket_unchecked(&[x, y, z]);
    let one = Rational::one();
    let minus = -Rational::one();
    let out = match c.degree {
        1 => collect(Theory::TriLie, c.coeffs, 2, d, |v| {
            let (x, y, z) = (v[0].as_slice(), v[1].as_slice(), v[2].as_slice());
            let fxyz = c.eval_unchecked(&[&br(x, y, z)]);
            if !adjoint {
                return fxyz;
            }
            let mut out = br(&c.eval_unchecked(&[x]), y, z);
            axpy(&mut out, &one, &br(x, &c.eval_unchecked(&[y]), z));
            axpy(&mut out, &one, &br(x, y, &c.eval_unchecked(&[z])));
            axpy(&mut out, &minus, &fxyz);
            out
        }),
        2 => collect(Theory::TriLie, c.coeffs, 3, d, |v| {
            let (x1, x2, y1, y2, z) =
                (v[0].as_slice(), v[1].as_slice(), v[2].as_slice(), v[3].as_slice(), v[4].as_slice());
            let psi = |p: &[Rational], q: &[Rational], r: &[Rational]| c.eval_unchecked(&[p, q, r]);
            let mut out = psi(x1, x2, &br(y1, y2, z));
            axpy(&mut out, &minus, &psi(&br(x1, x2, y1), y2, z));
            axpy(&mut out, &minus, &psi(y1, &br(x1, x2, y2), z));
            axpy(&mut out, &minus, &psi(y1, y2, &br(x1, x2, z)));
            if adjoint {
                axpy(&mut out, &one, &br(x1, x2, &psi(y1, y2, z)));
                axpy(&mut out, &minus, &br(&psi(x1, x2, y1), y2, z));
                axpy(&mut out, &minus, &br(y1, &psi(x1, x2, y2), z));
                axpy(&mut out, &minus, &br(y1, y2, &psi(x1, x2, z)));
            }
            out
        }),
        p => return Err(Error::UnsupportedDegree { theory: "trilie", degree: p }),
    };
    Ok(out)
}

/// The coboundary operator of the given theory.
pub fn coboundary(a: &StructureConstants, c: &Cochain) -> Result<Cochain> {
    match c.theory {
        Theory::Lie => lie_delta(a, c),
        Theory::TriLie => trilie_d(a, c),
    }
}

fn check_supported(theory: Theory, degree: usize) -> Result<()> {
    let ok = match theory {
        Theory::Lie => degree <= 2,
        Theory::TriLie => (1..=2).contains(&degree),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::UnsupportedDegree { theory: theory.name(), degree })
    }
}

fn coordinate_count(theory: Theory, coeffs: Coeffs, degree: usize, dim: usize) -> usize {
    cochain_keys(theory, degree, dim).len() * coeffs.value_dim(dim)
}

fn unit_cochain(theory: Theory, coeffs: Coeffs, degree: usize, dim: usize, n: usize) -> Cochain {
    let mut coords = vec![Rational::zero(); coordinate_count(theory, coeffs, degree, dim)];
    coords[n] = Rational::one();
    Cochain::from_coords(theory, coeffs, degree, dim, &coords).expect("layout")
}

/// Images of the unit cochains of the given degree, one per coordinate.
fn images(a: &StructureConstants, theory: Theory, coeffs: Coeffs, degree: usize) -> Result<Vec<Vec<Rational>>> {
    let d = a.dim();
    (0..coordinate_count(theory, coeffs, degree, d))
        .map(|n| coboundary(a, &unit_cochain(theory, coeffs, degree, d, n)).map(|c| c.coords()))
        .collect()
}

/// The matrix of the coboundary out of the given degree (rows: output
/// coordinates, columns: input coordinates).
pub fn operator_matrix(a: &StructureConstants, theory: Theory, coeffs: Coeffs, degree: usize) -> Result<Matrix> {
    check_algebra(a, theory)?;
    let cols = images(a, theory, coeffs, degree)?;
    let out = coordinate_count(theory, coeffs, degree + 1, a.dim());
    Ok(Matrix::from_rows(out, cols)?.transpose())
}

/// `Z^p`, as a subspace of the coordinate space of degree-`p` cochains.
pub fn cocycle_space(a: &StructureConstants, theory: Theory, coeffs: Coeffs, degree: usize) -> Result<Subspace> {
    check_supported(theory, degree)?;
    Ok(nullspace(&operator_matrix(a, theory, coeffs, degree)?))
}

/// Inner derivations `z ↦ [e_i, e_j, z]` of a 3-Lie algebra as degree-1 cochains.
pub fn inner_derivations(a: &StructureConstants) -> Result<Vec<Cochain>> {
    check_algebra(a, Theory::TriLie)?;
    let d = a.dim();
    Ok(increasing_tuples(d, 2)
        .into_iter()
        .map(|p| {
            let table = (0..d)
                .map(|z| (vec![z], a.basis_bracket(&[p[0], p[1], z])))
                .filter(|(_, v)| !is_zero_vector(v))
                .collect();
            Cochain { theory: Theory::TriLie, coeffs: Coeffs::Adjoint, degree: 1, dim: d, table }
        })
        .collect())
}

/// `B^p`, in the same coordinates as [`cocycle_space`].
pub fn coboundary_space(a: &StructureConstants, theory: Theory, coeffs: Coeffs, degree: usize) -> Result<Subspace> {
    check_supported(theory, degree)?;
    check_algebra(a, theory)?;
    let d = a.dim();
    let n = coordinate_count(theory, coeffs, degree, d);
    match (theory, degree, coeffs) {
        (Theory::Lie, 0, _) | (Theory::TriLie, 1, Coeffs::Scalar) => Ok(Subspace::zero(n)),
        (Theory::TriLie, 1, Coeffs::Adjoint) => {
            Subspace::span(n, inner_derivations(a)?.iter().map(Cochain::coords))
        }
        _ => Subspace::span(n, images(a, theory, coeffs, degree - 1)?),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyReport {
    pub theory: Theory,
    pub coeffs: Coeffs,
    pub degree: usize,
    pub dim_z: usize,
    pub dim_b: usize,
    pub dim_h: usize,
    pub z: Subspace,
    pub b: Subspace,
}

pub fn cohomology_report(a: &StructureConstants, theory: Theory, coeffs: Coeffs, degree: usize) -> Result<CohomologyReport> {
    let z = cocycle_space(a, theory, coeffs, degree)?;
    let b = coboundary_space(a, theory, coeffs, degree)?;
    if !b.leq(&z)? {
        return Err(Error::Contract(format!(
            "{} {} B^{degree} is not contained in Z^{degree}",
            theory.name(),
            coeffs.name()
        )));
    }
    Ok(CohomologyReport {
        theory,
        coeffs,
        degree,
        dim_z: z.dim(),
        dim_b: b.dim(),
        dim_h: z.dim() - b.dim(),
        z,
        b,
    })
}

/// Derivations of an `n`-ary bracket in the coordinates of degree-1
/// adjoint cochains (entry `k·d + q` is the `q`-th coordinate of `f(e_k)`).
pub fn derivations(a: &StructureConstants) -> Subspace {
    let d = a.dim();
    let n = a.arity();
    let mut rows = Vec::new();
    for tuple in increasing_tuples(d, n) {
        let value = a.basis_bracket(&tuple);
        for q in 0..d {
            // f([e..])_q − Σ_slot [.. f(e_slot) ..]_q, linear in z_{mk}
            let mut row = vec![Rational::zero(); d * d];
            for (k, c) in value.iter().enumerate() {
                if !c.is_zero() {
                    row[k * d + q] += c;
                }
            }
            for slot in 0..n {
                for m in 0..d {
                    let mut idx = tuple.clone();
                    idx[slot] = m;
                    let b = a.basis_bracket(&idx);
                    if !b[q].is_zero() {
                        row[tuple[slot] * d + m] -= &b[q];
                    }
                }
            }
            if !is_zero_vector(&row) {
                rows.push(row);
            }
        }
    }
    nullspace(&Matrix::from_rows(d * d, rows).expect("row width"))
}

/// `Ok(())` if `f` (columns are images) is a derivation, else the failing tuple.
pub fn check_derivation(a: &StructureConstants, f: &Matrix) -> Result<()> {
    let d = a.dim();
    if f.rows() != d || f.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, got: f.rows().max(f.cols()) });
    }
    let fe: Vec<Vec<Rational>> = (0..d).map(|k| (0..d).map(|q| f.get(q, k).clone()).collect()).collect();
    for tuple in increasing_tuples(d, a.arity()) {
        let mut defect = f.mul_vec(&a.basis_bracket(&tuple))?;
        for slot in 0..tuple.len() {
            let mut args: Vec<&[Rational]> = Vec::new();
            let units: Vec<Vec<Rational>> = tuple.iter().map(|&i| unit_vector(d, i)).collect();
            for (i, u) in units.iter().enumerate() {
                args.push(if i == slot { &fe[tuple[slot]] } else { u });
            }
            axpy(&mut defect, &-Rational::one(), &a.bracket_unchecked(&args));
        }
        if !is_zero_vector(&defect) {
            return Err(Error::NotADerivation { tuple: one_based(&tuple) });
        }
    }
    Ok(())
}

/// `τ ∘ f`, checked to be a trace.
pub fn trace_compose_check(a: &StructureConstants, tau: &LinearForm, f: &Matrix) -> Result<LinearForm> {
    check_algebra(a, Theory::Lie)?;
    check_trace(a, tau)?;
    check_derivation(a, f)?;
    let composed = LinearForm::new(f.transpose().mul_vec(tau.coeffs())?);
    check_trace(a, &composed).map_err(|_| Error::Contract("τ∘f is not a trace".into()))?;
    Ok(composed)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivationTransfer {
    /// `[x,y,z]_{τ∘f} = 0` for all `x, y, z`.
    pub is_induced_derivation: bool,
    /// `d¹f = 0` in the induced algebra, checked directly.
    pub direct: bool,
    /// The bracket induced by `τ∘f`.
    pub obstruction: StructureConstants,
}

pub fn derivation_transfer(a: &StructureConstants, tau: &LinearForm, f: &Matrix) -> Result<DerivationTransfer> {
    let composed = trace_compose_check(a, tau, f)?;
    let obstruction = induce_bracket(a, &composed)?;
    let induced = induce_bracket(a, tau)?;
    let direct = trilie_d(&induced, &Cochain::from_linear_map(Theory::TriLie, f)?)?.is_zero();
    Ok(DerivationTransfer { is_induced_derivation: obstruction.is_abelian(), direct, obstruction })
}

/// `ψ(x,y,z) = ω(x)φ(y,z) + ω(y)φ(z,x) + ω(z)φ(x,y)` as a 3-Lie 2-cochain.
pub fn cyclic_lift(phi: &Cochain, omega: &LinearForm) -> Result<Cochain> {
    if phi.theory != Theory::Lie || phi.degree != 2 {
        return Err(Error::CochainShape("expected a Lie 2-cochain".into()));
    }
    if omega.dim() != phi.dim {
        return Err(Error::DimensionMismatch { expected: phi.dim, got: omega.dim() });
    }
    let d = phi.dim;
    let w = omega.coeffs();
    let table = cochain_keys(Theory::TriLie, 2, d)
        .into_iter()
        .filter_map(|k| {
            let (x, y, z) = (k[0], k[1], k[2]);
            let mut v = vec![Rational::zero(); phi.value_dim()];
            axpy(&mut v, &w[x], &phi.eval_basis(&[y, z]));
            axpy(&mut v, &w[y], &phi.eval_basis(&[z, x]));
            axpy(&mut v, &w[z], &phi.eval_basis(&[x, y]));
            (!is_zero_vector(&v)).then_some((k, v))
        })
        .collect();
    Ok(Cochain { theory: Theory::TriLie, coeffs: phi.coeffs, degree: 2, dim: d, table })
}

fn first_nonzero(c: &Cochain) -> Option<Vec<usize>> {
    c.table.keys().next().map(|k| one_based(k))
}

/// Lifts a Lie 2-cocycle to a 2-cocycle of the induced 3-Lie algebra,
/// after checking the hypotheses of the lifting theorem for the cochain's
/// coefficients:
///
/// 0. `φ` is a 2-cocycle;
/// 1. `τ(x)ω(y) = τ(y)ω(x)`;
/// 2. `ω([x,y]) = 0`;
/// 3. adjoint: `ω(x)τ(φ(y,z)) + ω(y)τ(φ(z,x)) + ω(z)τ(φ(x,y)) = 0`;
///    scalar: `ω(y₂)(τ(x₁)φ([y₁,z],x₂) + τ(x₂)φ([z,y₁],x₁)) = 0`.
///
/// Conditions are checked on all basis tuples, and the result is checked
/// to satisfy `d²ψ = 0`.
pub fn lift_2cocycle(a: &StructureConstants, tau: &LinearForm, phi: &Cochain, omega: &LinearForm) -> Result<Cochain> {
    check_cochain(a, phi, Theory::Lie)?;
    check_trace(a, tau)?;
    if phi.degree != 2 {
        return Err(Error::CochainShape("expected a Lie 2-cochain".into()));
    }
    let d = a.dim();
    if omega.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, got: omega.dim() });
    }
    let lift_err = |condition, tuple| Error::Lift { condition, tuple };
    if let Some(t) = first_nonzero(&lie_delta(a, phi)?) {
        return Err(lift_err(LiftCondition::Cocycle, t));
    }
    let (t, w) = (tau.coeffs(), omega.coeffs());
    for p in increasing_tuples(d, 2) {
        let (i, j) = (p[0], p[1]);
        if &t[i] * &w[j] != &t[j] * &w[i] {
            return Err(lift_err(LiftCondition::Proportional, one_based(&p)));
        }
        if !omega.eval(&a.basis_bracket(&p))?.is_zero() {
            return Err(lift_err(LiftCondition::KillsDerived, one_based(&p)));
        }
    }
    match phi.coeffs {
        Coeffs::Adjoint => {
            let tphi = |i: usize, j: usize| tau.eval(&phi.eval_basis(&[i, j])).expect("dims");
            for k in increasing_tuples(d, 3) {
                let (x, y, z) = (k[0], k[1], k[2]);
                let s = &w[x] * tphi(y, z) + &w[y] * tphi(z, x) + &w[z] * tphi(x, y);
                if !s.is_zero() {
                    return Err(lift_err(LiftCondition::Cyclic, one_based(&k)));
                }
            }
        }
        Coeffs::Scalar => {
            let units: Vec<Vec<Rational>> = (0..d).map(|i| unit_vector(d, i)).collect();
            let phi_at = |u: &[Rational], v: &[Rational]| phi.eval_unchecked(&[u, v])[0].clone();
            for y2 in (0..d).filter(|&i| !w[i].is_zero()) {
                for x1 in 0..d {
                    for x2 in 0..d {
                        if t[x1].is_zero() && t[x2].is_zero() {
                            continue;
                        }
                        for y1 in 0..d {
                            for z in 0..d {
                                let yz = a.basis_bracket(&[y1, z]);
                                let zy = neg(yz.clone());
                                let s = &t[x1] * phi_at(&yz, &units[x2]) + &t[x2] * phi_at(&zy, &units[x1]);
                                if !(&w[y2] * s).is_zero() {
                                    return Err(lift_err(
                                        LiftCondition::Cyclic,
                                        one_based(&[x1, x2, y1, y2, z]),
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let psi = cyclic_lift(phi, omega)?;
    let induced = induce_bracket(a, tau)?;
    if let Some(t) = first_nonzero(&trilie_d(&induced, &psi)?) {
        return Err(Error::Contract(format!("lifted cochain is not a 2-cocycle at {t:?}")));
    }
    Ok(psi)
}

/// Whether a scalar Lie 1-cocycle `ω` is also a scalar 1-cocycle of the
/// induced algebra.
pub fn scalar_1cocycle_transfer(a: &StructureConstants, tau: &LinearForm, omega: &LinearForm) -> Result<bool> {
    check_algebra(a, Theory::Lie)?;
    let w = Cochain::from_form(Theory::Lie, omega);
    if let Some(t) = first_nonzero(&lie_delta(a, &w)?) {
        return Err(Error::NotACocycle { tuple: t });
    }
    let induced = induce_bracket(a, tau)?;
    let w3 = Cochain::from_form(Theory::TriLie, omega);
    Ok(trilie_d(&induced, &w3)?.is_zero())
}

/// Checks `d¹α(x,y,z) = τ(x)δ¹α(y,z) + τ(y)δ¹α(z,x) + τ(z)δ¹α(x,y)` on basis triples.
pub fn induced_coboundary_identity(a: &StructureConstants, tau: &LinearForm, alpha: &LinearForm) -> Result<bool> {
    check_algebra(a, Theory::Lie)?;
    let induced = induce_bracket(a, tau)?;
    if alpha.dim() != a.dim() {
        return Err(Error::DimensionMismatch { expected: a.dim(), got: alpha.dim() });
    }
    let lhs = trilie_d(&induced, &Cochain::from_form(Theory::TriLie, alpha))?;
    let delta = lie_delta(a, &Cochain::from_form(Theory::Lie, alpha))?;
    let rhs = cyclic_lift(&delta, tau)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use crate::induce::induced_family;
    use crate::testutil::{sc, v};
    use proptest::prelude::*;

    fn gl2() -> StructureConstants {
        sc(2, 4, &[(&[1, 2], &[(2, 2)]), (&[1, 3], &[(3, -2)]), (&[2, 3], &[(1, 1)])])
    }

    fn m4() -> StructureConstants {
        sc(2, 4, &[(&[2, 4], &[(3, 1)]), (&[3, 4], &[(3, 1)])])
    }

    fn m5() -> StructureConstants {
        sc(2, 4, &[(&[2, 4], &[(3, 1)])])
    }

    fn m8() -> StructureConstants {
        sc(2, 4, &[(&[1, 2], &[(2, 1)]), (&[3, 4], &[(4, 1)])])
    }

    fn form(c: &[i64]) -> LinearForm {
        LinearForm::new(c.iter().map(|&x| rat(x)).collect())
    }

    fn diag(c: &[i64]) -> Matrix {
        let mut m = Matrix::zeros(c.len(), c.len());
        for (i, &x) in c.iter().enumerate() {
            m.set(i, i, rat(x));
        }
        m
    }

    fn scalar2(d: usize, entries: &[(&[usize], i64)]) -> Cochain {
        Cochain::from_assignments(
            Theory::Lie,
            Coeffs::Scalar,
            2,
            d,
            entries.iter().map(|(k, c)| (k.to_vec(), vec![rat(*c)])),
        )
        .unwrap()
    }

    #[test]
    fn identity_map_on_abelian_is_a_cocycle() {
        let a = StructureConstants::abelian(2, 3);
        let id = Cochain::from_linear_map(Theory::Lie, &Matrix::identity(3)).unwrap();
        assert!(lie_delta(&a, &id).unwrap().is_zero());
        // on M5 the identity is not a derivation: δ¹id(e2,e4) = [e2,e4] = e3
        let id4 = Cochain::from_linear_map(Theory::Lie, &Matrix::identity(4)).unwrap();
        let d = lie_delta(&m5(), &id4).unwrap();
        assert_eq!(d.eval_basis(&[1, 3]), v(4, &[(3, 1)]));
    }

    #[test]
    fn scalar_delta_one_on_m4() {
        let alpha = Cochain::from_form(Theory::Lie, &form(&[0, 0, 1, 0]));
        let d = lie_delta(&m4(), &alpha).unwrap();
        assert_eq!(d.eval_basis(&[1, 3]), vec![rat(1)]);
        assert_eq!(d.eval_basis(&[2, 3]), vec![rat(1)]);
        assert_eq!(d.entries().count(), 2);
    }

    #[test]
    fn degree_errors() {
        let c = Cochain::zero(Theory::Lie, Coeffs::Scalar, 3, 4);
        assert_eq!(lie_delta(&m4(), &c), Err(Error::UnsupportedDegree { theory: "lie", degree: 3 }));
        let t = induce_bracket(&m5(), &form(&[1, 0, 0, 0])).unwrap();
        let c = Cochain::zero(Theory::TriLie, Coeffs::Scalar, 3, 4);
        assert_eq!(trilie_d(&t, &c), Err(Error::UnsupportedDegree { theory: "trilie", degree: 3 }));
        assert!(cocycle_space(&t, Theory::TriLie, Coeffs::Adjoint, 3).is_err());
        assert!(cocycle_space(&m5(), Theory::TriLie, Coeffs::Adjoint, 1).is_err());
    }

    #[test]
    fn abelian_three_lie_operators_vanish() {
        let a = StructureConstants::abelian(3, 3);
        let f = Cochain::from_linear_map(Theory::TriLie, &diag(&[1, 2, 3])).unwrap();
        assert!(trilie_d(&a, &f).unwrap().is_zero());
        let r = cohomology_report(&a, Theory::TriLie, Coeffs::Adjoint, 2).unwrap();
        assert_eq!(r.dim_z, coordinate_count(Theory::TriLie, Coeffs::Adjoint, 2, 3));
    }

    #[test]
    fn induced_m5_derivations() {
        let t = induce_bracket(&m5(), &form(&[1, 0, 0, 0])).unwrap();
        let f = Cochain::from_linear_map(Theory::TriLie, &diag(&[0, 0, 1, 1])).unwrap();
        assert!(trilie_d(&t, &f).unwrap().is_zero());
        let g = Cochain::from_linear_map(Theory::TriLie, &diag(&[1, 0, 0, 0])).unwrap();
        let dg = trilie_d(&t, &g).unwrap();
        assert_eq!(dg.eval_basis(&[0, 1, 3]), v(4, &[(3, 1)]));
    }

    #[test]
    fn golden_lie_dimensions() {
        let cases = [(gl2(), 4, 3), (m4(), 8, 2), (m5(), 10, 2), (m8(), 4, 4)];
        for (a, z, b) in cases {
            let r = cohomology_report(&a, Theory::Lie, Coeffs::Adjoint, 1).unwrap();
            assert_eq!((r.dim_z, r.dim_b), (z, b));
        }
        let ab = cohomology_report(&StructureConstants::abelian(2, 3), Theory::Lie, Coeffs::Adjoint, 1).unwrap();
        assert_eq!((ab.dim_z, ab.dim_b), (9, 0));
    }

    #[test]
    fn golden_induced_dimensions() {
        let cases = [
            (gl2(), form(&[0, 0, 0, 1]), 1),
            (m4(), form(&[1, 1, 0, 1]), 6),
            (m5(), form(&[1, 0, 0, 0]), 9),
            (m8(), form(&[1, 0, 1, 0]), 4),
        ];
        for (a, tau, h) in cases {
            let t = induce_bracket(&a, &tau).unwrap();
            let r = cohomology_report(&t, Theory::TriLie, Coeffs::Adjoint, 1).unwrap();
            assert_eq!(r.dim_h, h);
        }
    }

    #[test]
    fn derivations_agree_with_cocycles() {
        for a in [gl2(), m4(), m5(), m8()] {
            assert_eq!(derivations(&a), cocycle_space(&a, Theory::Lie, Coeffs::Adjoint, 1).unwrap());
            for (_, t) in induced_family(&a) {
                assert_eq!(derivations(&t), cocycle_space(&t, Theory::TriLie, Coeffs::Adjoint, 1).unwrap());
            }
        }
    }

    #[test]
    fn trace_composition() {
        let tau = form(&[1, 0, 0, 0]);
        assert!(trace_compose_check(&m5(), &tau, &Matrix::zeros(4, 4)).unwrap().is_zero());
        assert_eq!(trace_compose_check(&m5(), &tau, &diag(&[1, 0, 0, 0])).unwrap(), tau);
        assert!(trace_compose_check(&m5(), &tau, &diag(&[0, 0, 1, 1])).unwrap().is_zero());
        assert!(matches!(
            trace_compose_check(&m5(), &tau, &diag(&[0, 1, 0, 0])),
            Err(Error::NotADerivation { .. })
        ));
    }

    #[test]
    fn derivation_transfer_examples() {
        let tau = form(&[1, 0, 0, 0]);
        let r = derivation_transfer(&m5(), &tau, &diag(&[0, 0, 1, 1])).unwrap();
        assert!(r.is_induced_derivation && r.direct);
        let r = derivation_transfer(&m5(), &tau, &diag(&[1, 0, 0, 0])).unwrap();
        assert!(!r.is_induced_derivation && !r.direct);
        assert_eq!(r.obstruction, sc(3, 4, &[(&[1, 2, 4], &[(3, 1)])]));
        // inner derivations
        let a = gl2();
        let tau = form(&[0, 0, 0, 1]);
        for y in 0..4 {
            let mut ad = Matrix::zeros(4, 4);
            for k in 0..4 {
                let col = a.basis_bracket(&[y, k]);
                for q in 0..4 {
                    ad.set(q, k, col[q].clone());
                }
            }
            let r = derivation_transfer(&a, &tau, &ad).unwrap();
            assert!(r.is_induced_derivation && r.direct);
        }
    }

    #[test]
    fn lift_with_zero_omega() {
        let tau = form(&[1, 0, 0, 0]);
        let mu = scalar2(4, &[(&[2, 4], 1), (&[3, 4], -1)]);
        assert!(lift_2cocycle(&m4(), &tau, &mu, &LinearForm::zero(4)).unwrap().is_zero());
    }

    #[test]
    fn lift_of_coboundary_is_induced_coboundary() {
        let tau = form(&[1, 0, 0, 0]);
        let alpha = form(&[0, 0, 1, 0]);
        let phi = lie_delta(&m4(), &Cochain::from_form(Theory::Lie, &alpha)).unwrap();
        let psi = cyclic_lift(&phi, &tau).unwrap();
        let t = induce_bracket(&m4(), &tau).unwrap();
        assert_eq!(psi, trilie_d(&t, &Cochain::from_form(Theory::TriLie, &alpha)).unwrap());
        // the literal third hypothesis of the scalar theorem still rejects it
        let err = lift_2cocycle(&m4(), &tau, &phi, &tau).unwrap_err();
        assert!(matches!(err, Error::Lift { condition: LiftCondition::Cyclic, .. }));
    }

    #[test]
    fn mu_example_lift() {
        let tau = form(&[1, 0, 0, 0]);
        let mu = scalar2(4, &[(&[2, 4], 1), (&[3, 4], -1)]);
        let psi = cyclic_lift(&mu, &tau).unwrap();
        assert_eq!(psi.eval_basis(&[0, 1, 3]), vec![rat(1)]);
        assert_eq!(psi.eval_basis(&[0, 2, 3]), vec![rat(-1)]);
        let t = induce_bracket(&m4(), &tau).unwrap();
        assert!(trilie_d(&t, &psi).unwrap().is_zero());
        // the literal third hypothesis rejects it although d²ψ = 0
        let err = lift_2cocycle(&m4(), &tau, &mu, &tau).unwrap_err();
        assert!(matches!(err, Error::Lift { condition: LiftCondition::Cyclic, .. }));
    }

    #[test]
    fn lift_hypotheses_are_reported() {
        let tau = form(&[1, 0, 0, 0]);
        let not_cocycle = Cochain::from_assignments(
            Theory::Lie,
            Coeffs::Adjoint,
            2,
            4,
            [(vec![1, 3], v(4, &[(1, 1)]))],
        )
        .unwrap();
        let e = lift_2cocycle(&m5(), &tau, &not_cocycle, &tau).unwrap_err();
        assert_eq!(e, Error::Lift { condition: LiftCondition::Cocycle, tuple: vec![1, 2, 4] });
        let zero = Cochain::zero(Theory::Lie, Coeffs::Scalar, 2, 4);
        let e = lift_2cocycle(&m5(), &tau, &zero, &form(&[0, 1, 0, 0])).unwrap_err();
        assert_eq!(e, Error::Lift { condition: LiftCondition::Proportional, tuple: vec![1, 2] });
    }

    #[test]
    fn scalar_one_cocycles_transfer() {
        let ab = StructureConstants::abelian(2, 3);
        for i in 0..3 {
            assert!(scalar_1cocycle_transfer(&ab, &form(&[1, 1, 1]), &LinearForm::coordinate(3, i)).unwrap());
        }
        assert!(scalar_1cocycle_transfer(&m5(), &form(&[1, 0, 0, 0]), &form(&[0, 1, 0, 0])).unwrap());
        assert!(scalar_1cocycle_transfer(&gl2(), &form(&[0, 0, 0, 1]), &form(&[0, 0, 0, 1])).unwrap());
        let e = scalar_1cocycle_transfer(&m5(), &form(&[1, 0, 0, 0]), &form(&[0, 0, 1, 0])).unwrap_err();
        assert_eq!(e, Error::NotACocycle { tuple: vec![2, 4] });
    }

    #[test]
    fn coboundary_identity_examples() {
        assert!(induced_coboundary_identity(&m4(), &form(&[1, 0, 0, 0]), &LinearForm::zero(4)).unwrap());
        assert!(induced_coboundary_identity(&m4(), &form(&[1, 0, 0, 0]), &form(&[0, 0, 1, 0])).unwrap());
    }

    #[test]
    fn full_skew_flag() {
        let t = induce_bracket(&m5(), &form(&[1, 0, 0, 0])).unwrap();
        let d1 = trilie_d(&t, &Cochain::from_form(Theory::TriLie, &form(&[0, 0, 1, 0]))).unwrap();
        assert!(d1.is_fully_skew());
        let pair_only = Cochain::from_assignments(
            Theory::TriLie,
            Coeffs::Scalar,
            2,
            3,
            [(vec![1, 2, 3], vec![rat(1)])],
        )
        .unwrap();
        assert!(!pair_only.is_fully_skew());
    }

    #[test]
    fn matrix_round_trip() {
        let m = Matrix::from_i64(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).unwrap();
        let c = Cochain::from_linear_map(Theory::Lie, &m).unwrap();
        assert_eq!(c.to_matrix().unwrap(), m);
        // column k is f(e_k)
        assert_eq!(c.eval_basis(&[0]), vec![rat(1), rat(4), rat(7)]);
        assert_eq!(Cochain::from_coords(Theory::Lie, Coeffs::Adjoint, 1, 3, &c.coords()).unwrap(), c);
    }

    fn small_cochain(theory: Theory, coeffs: Coeffs, degree: usize, d: usize) -> impl Strategy<Value = Cochain> {
        let n = coordinate_count(theory, coeffs, degree, d);
        proptest::collection::vec(-2i64..=2, n).prop_map(move |c| {
            let coords: Vec<Rational> = c.into_iter().map(rat).collect();
            Cochain::from_coords(theory, coeffs, degree, d, &coords).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn delta_squared_vanishes_adjoint(f in small_cochain(Theory::Lie, Coeffs::Adjoint, 1, 4)) {
            for a in [gl2(), m4(), m8()] {
                prop_assert!(lie_delta(&a, &lie_delta(&a, &f).unwrap()).unwrap().is_zero());
            }
        }

        #[test]
        fn delta_squared_vanishes_scalar(f in small_cochain(Theory::Lie, Coeffs::Scalar, 1, 4)) {
            for a in [gl2(), m4(), m8()] {
                prop_assert!(lie_delta(&a, &lie_delta(&a, &f).unwrap()).unwrap().is_zero());
            }
        }

        #[test]
        fn delta_squared_vanishes_degree_zero(m in small_cochain(Theory::Lie, Coeffs::Adjoint, 0, 4)) {
            prop_assert!(lie_delta(&gl2(), &lie_delta(&gl2(), &m).unwrap()).unwrap().is_zero());
        }

        #[test]
        fn trilie_d_squared_vanishes(f in small_cochain(Theory::TriLie, Coeffs::Scalar, 1, 4),
                                     g in small_cochain(Theory::TriLie, Coeffs::Adjoint, 1, 4)) {
            for a in [gl2(), m4(), m8()] {
                for (_, t) in induced_family(&a) {
                    prop_assert!(trilie_d(&t, &trilie_d(&t, &f).unwrap()).unwrap().is_zero());
                    prop_assert!(trilie_d(&t, &trilie_d(&t, &g).unwrap()).unwrap().is_zero());
                }
            }
        }
    }
}
