//! Built-in Lie and 3-Lie algebras, recognition of induced 3-Lie algebras,
//! and the trace table for the Lie catalog.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::algebra::StructureConstants;
use crate::error::{Error, Result};
use crate::exactlin::{format_rational, parse_rational, rat, Rational};
use crate::induce::{check_trace, induce_bracket, trace_space, LinearForm};
use crate::structure::derived_series;

/// Named parameter values.
pub type Params = BTreeMap<String, Rational>;

/// A bracket assignment with 1-based indices and sparse value.
type Raw = (Vec<usize>, Vec<(usize, Rational)>);

pub struct CatalogEntry {
    pub id: &'static str,
    pub arity: usize,
    pub dim: usize,
    /// How the algebra is named in the classification lists.
    pub label: &'static str,
    /// Parameter names with default values.
    pub params: Vec<(&'static str, Rational)>,
    /// Validity condition on the parameters, as text.
    pub predicate: &'static str,
    pub note: &'static str,
    /// For 3-Lie entries: whether the classification proposition lists the
    /// algebra as induced. `None` when it is not covered.
    pub listed_induced: Option<bool>,
    valid: fn(&Params) -> bool,
    build: fn(&Params) -> Vec<Raw>,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("arity", &self.arity)
            .field("dim", &self.dim)
            .field("predicate", &self.predicate)
            .finish_non_exhaustive()
    }
}

impl CatalogEntry {
    pub fn defaults(&self) -> Params {
        self.params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    /// Defaults overridden by `overrides`, checked against the predicate.
    pub fn resolve(&self, overrides: &Params) -> Result<Params> {
        let mut p = self.defaults();
        for (k, v) in overrides {
            match p.get_mut(k) {
                Some(slot) => *slot = v.clone(),
                None => {
                    return Err(Error::InvalidParams {
                        id: self.id.into(),
                        reason: format!("unknown parameter `{k}`"),
                    })
                }
            }
        }
        if !(self.valid)(&p) {
            return Err(Error::InvalidParams { id: self.id.into(), reason: format!("requires {}", self.predicate) });
        }
        Ok(p)
    }

    pub fn instantiate(&self, overrides: &Params) -> Result<StructureConstants> {
        let p = self.resolve(overrides)?;
        let raw = (self.build)(&p).into_iter().map(|(k, sparse)| {
            let mut v = vec![Rational::zero(); self.dim];
            for (i, c) in sparse {
                v[i - 1] += c;
            }
            (k, v)
        });
        StructureConstants::canonicalize(self.arity, self.dim, raw)
    }

    pub fn default_instance(&self) -> StructureConstants {
        self.instantiate(&Params::new()).expect("catalog defaults are valid")
    }
}

fn q(n: i64) -> Rational {
    rat(n)
}

fn g(p: &Params, name: &str) -> Rational {
    p[name].clone()
}

fn br(tuple: &[usize], value: Vec<(usize, Rational)>) -> Raw {
    (tuple.to_vec(), value)
}

fn e(i: usize) -> Vec<(usize, Rational)> {
    vec![(i, q(1))]
}

fn always(_: &Params) -> bool {
    true
}

fn nonzero_all(p: &Params) -> bool {
    p.values().all(|v| !v.is_zero())
}

fn is_rational_square(x: &Rational) -> bool {
    if x.is_negative() {
        return false;
    }
    let (n, d) = (x.numer(), x.denom());
    let (rn, rd) = (n.sqrt(), d.sqrt());
    &(&rn * &rn) == n && &(&rd * &rd) == d
}

struct Spec {
    id: &'static str,
    arity: usize,
    dim: usize,
    label: &'static str,
    params: &'static [(&'static str, i64)],
    predicate: &'static str,
    note: &'static str,
    listed_induced: Option<bool>,
    valid: fn(&Params) -> bool,
    build: fn(&Params) -> Vec<Raw>,
}

fn entry(s: Spec) -> CatalogEntry {
    CatalogEntry {
        id: s.id,
        arity: s.arity,
        dim: s.dim,
        label: s.label,
        params: s.params.iter().map(|&(k, v)| (k, q(v))).collect(),
        predicate: s.predicate,
        note: s.note,
        listed_induced: s.listed_induced,
        valid: s.valid,
        build: s.build,
    }
}

fn lie(id: &'static str, dim: usize, label: &'static str, build: fn(&Params) -> Vec<Raw>) -> Spec {
    Spec {
        id,
        arity: 2,
        dim,
        label,
        params: &[],
        predicate: "none",
        note: "",
        listed_induced: None,
        valid: always,
        build,
    }
}

fn tri(id: &'static str, dim: usize, label: &'static str, listed: bool, build: fn(&Params) -> Vec<Raw>) -> Spec {
    let note = if dim == 5 { "classified over an algebraically closed field; instantiated over Q" } else { "" };
    Spec {
        id,
        arity: 3,
        dim,
        label,
        params: &[],
        predicate: "none",
        note,
        listed_induced: Some(listed),
        valid: always,
        build,
    }
}

const DEFAULTS_NOTE: &str = "default parameter values are an implementation choice";

fn with_params(
    mut s: Spec,
    params: &'static [(&'static str, i64)],
    predicate: &'static str,
    valid: fn(&Params) -> bool,
) -> Spec {
    s.params = params;
    s.predicate = predicate;
    s.valid = valid;
    if s.note.is_empty() {
        s.note = DEFAULTS_NOTE;
    }
    s
}

fn unlisted(mut s: Spec) -> Spec {
    s.listed_induced = None;
    s.note = "dimension below 3, not covered by the induced list";
    s
}

fn with_note(mut s: Spec, note: &'static str) -> Spec {
    s.note = note;
    s
}

fn lie_specs() -> Vec<Spec> {
    vec![
        lie("L3_abelian", 3, "abelian Lie algebra of dimension 3", |_| vec![]),
        lie("L(3,-1)", 3, "L(3,-1)", |_| vec![br(&[1, 2], e(2))]),
        lie("L(3,1)", 3, "L(3,1)", |_| vec![br(&[1, 2], e(3))]),
        with_params(
            lie("L(3,2,a)", 3, "L(3,2,a)", |p| vec![br(&[1, 3], e(1)), br(&[2, 3], vec![(2, g(p, "a"))])]),
            &[("a", 1)],
            "0 < |a| <= 1",
            |p| {
                let a = g(p, "a").abs();
                !a.is_zero() && a <= q(1)
            },
        ),
        lie("L(3,3)", 3, "L(3,3)", |_| vec![br(&[1, 3], e(1)), br(&[2, 3], vec![(1, q(1)), (2, q(1))])]),
        with_params(
            lie("L(3,4,a)", 3, "L(3,4,a)", |p| {
                vec![
                    br(&[1, 3], vec![(1, g(p, "a")), (2, q(-1))]),
                    br(&[2, 3], vec![(1, q(1)), (2, g(p, "a"))]),
                ]
            }),
            &[("a", 1)],
            "a >= 0",
            |p| !g(p, "a").is_negative(),
        ),
        lie("L(3,5)", 3, "L(3,5)", |_| {
            vec![br(&[1, 2], e(1)), br(&[1, 3], vec![(2, q(-2))]), br(&[2, 3], e(3))]
        }),
        lie("L(3,6)", 3, "L(3,6)", |_| {
            vec![br(&[1, 2], e(3)), br(&[1, 3], vec![(2, q(-1))]), br(&[2, 3], e(1))]
        }),
        lie("M1", 4, "abelian Lie algebra of dimension 4", |_| vec![]),
        lie("M2", 4, "M^2", |_| vec![br(&[1, 4], e(1)), br(&[2, 4], e(2)), br(&[3, 4], e(3))]),
        with_params(
            lie("M3_a", 4, "M^3_a", |p| {
                vec![
                    br(&[1, 4], e(1)),
                    br(&[2, 4], e(3)),
                    br(&[3, 4], vec![(2, -g(p, "a")), (3, g(p, "a") + q(1))]),
                ]
            }),
            &[("a", 1)],
            "a != 0",
            nonzero_all,
        ),
        lie("M3_0", 4, "M^3_0", |_| vec![br(&[1, 4], e(1)), br(&[2, 4], e(3)), br(&[3, 4], e(3))]),
        lie("M4", 4, "M^4", |_| vec![br(&[2, 4], e(3)), br(&[3, 4], e(3))]),
        lie("M5", 4, "M^5", |_| vec![br(&[2, 4], e(3))]),
        with_params(
            lie("M6_ab", 4, "M^6_{a,b}", |p| {
                vec![
                    br(&[1, 4], e(2)),
                    br(&[2, 4], e(3)),
                    br(&[3, 4], vec![(1, g(p, "a")), (2, g(p, "b")), (3, q(1))]),
                ]
            }),
            &[("a", 1), ("b", 1)],
            "a != 0",
            |p| !g(p, "a").is_zero(),
        ),
        with_params(
            lie("M6_0b", 4, "M^6_{0,b}", |p| {
                vec![br(&[1, 4], e(2)), br(&[2, 4], e(3)), br(&[3, 4], vec![(2, g(p, "b")), (3, q(1))])]
            }),
            &[("b", 1)],
            "none",
            always,
        ),
        with_params(
            lie("M7_ab", 4, "M^7_{a,b}", |p| {
                vec![
                    br(&[1, 4], e(2)),
                    br(&[2, 4], e(3)),
                    br(&[3, 4], vec![(1, g(p, "a")), (2, g(p, "b"))]),
                ]
            }),
            &[("a", 1), ("b", 1)],
            "a != 0 and (a = b or b = 0)",
            |p| {
                let (a, b) = (g(p, "a"), g(p, "b"));
                !a.is_zero() && (a == b || b.is_zero())
            },
        ),
        with_params(
            lie("M7_0b", 4, "M^7_{0,b}", |p| {
                vec![br(&[1, 4], e(2)), br(&[2, 4], e(3)), br(&[3, 4], vec![(2, g(p, "b"))])]
            }),
            &[("b", 1)],
            "none",
            always,
        ),
        lie("M8", 4, "M^8", |_| vec![br(&[1, 2], e(2)), br(&[3, 4], e(4))]),
        with_params(
            with_note(
                lie("M9_a", 4, "M^9_a", |p| {
                    vec![
                        br(&[1, 4], vec![(1, q(1)), (2, g(p, "a"))]),
                        br(&[2, 4], e(1)),
                        br(&[1, 3], e(1)),
                        br(&[2, 3], e(2)),
                    ]
                }),
                "over Q the root condition is checked as: 1 + 4a is not a rational square",
            ),
            &[("a", 1)],
            "X^2 - X - a has no root",
            |p| !is_rational_square(&(q(1) + q(4) * g(p, "a"))),
        ),
        with_note(
            lie("M11", 4, "M^11", |_| vec![br(&[1, 4], e(1)), br(&[3, 4], vec![(3, q(-1))]), br(&[1, 3], e(2))]),
            "[e3,e4] = -e3; the printed [e3,e4] = e3 violates the Jacobi identity",
        ),
        with_note(
            lie("M12", 4, "M^12", |_| {
                vec![br(&[1, 4], e(1)), br(&[2, 4], vec![(2, q(2))]), br(&[3, 4], e(3)), br(&[1, 3], e(2))]
            }),
            "[e2,e4] = 2e2; the printed [e2,e4] = e2 violates the Jacobi identity",
        ),
        with_params(
            lie("M13_a", 4, "M^13_a", |p| {
                vec![
                    br(&[1, 4], vec![(1, q(1)), (3, g(p, "a"))]),
                    br(&[2, 4], e(2)),
                    br(&[3, 4], e(1)),
                    br(&[1, 3], e(2)),
                ]
            }),
            &[("a", 1)],
            "a != 0",
            nonzero_all,
        ),
        lie("M13_0", 4, "M^13_0", |_| {
            vec![br(&[1, 4], e(1)), br(&[2, 4], e(2)), br(&[3, 4], e(1)), br(&[1, 3], e(2))]
        }),
        with_params(
            lie("M14_a", 4, "M^14_a", |p| {
                vec![br(&[1, 4], vec![(3, g(p, "a"))]), br(&[3, 4], e(1)), br(&[1, 3], e(2))]
            }),
            &[("a", 1)],
            "a != 0",
            nonzero_all,
        ),
        lie("M14_0", 4, "M^14_0", |_| vec![br(&[3, 4], e(1)), br(&[1, 3], e(2))]),
        lie("gl2", 4, "gl_2", |_| {
            vec![br(&[1, 2], vec![(2, q(2))]), br(&[1, 3], vec![(3, q(-2))]), br(&[2, 3], e(1))]
        }),
        with_note(
            lie("E3xK", 4, "E_3 x K", |_| vec![br(&[1, 2], e(3)), br(&[2, 3], e(1)), br(&[3, 1], e(2))]),
            "cross product on e1,e2,e3 with e4 central; listed over the reals",
        ),
    ]
}

fn trilie_specs() -> Vec<Spec> {
    let nonzero_abc = "a, b, c != 0";
    vec![
        unlisted(tri("T4.1_dim1", 1, "dim < 3, abelian", true, |_| vec![])),
        unlisted(tri("T4.1_dim2", 2, "dim < 3, abelian", true, |_| vec![])),
        tri("T4.2a", 3, "dim 3, item 2a", true, |_| vec![]),
        tri("T4.2b", 3, "dim 3, item 2b", true, |_| vec![br(&[1, 2, 3], e(1))]),
        tri("T4.3a", 4, "dim 4, item 3a", true, |_| vec![]),
        tri("T4.3b", 4, "dim 4, item 3b", true, |_| vec![br(&[2, 3, 4], e(1))]),
        tri("T4.3c", 4, "dim 4, item 3c", true, |_| vec![br(&[1, 2, 3], e(1))]),
        with_note(
            with_params(
                tri("T4.3d_C", 4, "dim 4, item 3d", true, |p| {
                    vec![
                        br(&[1, 2, 4], vec![(3, g(p, "a")), (4, g(p, "b"))]),
                        br(&[1, 2, 3], vec![(3, g(p, "c")), (4, g(p, "d"))]),
                    ]
                }),
                &[("a", 1), ("b", 0), ("c", 0), ("d", 1)],
                "C = (a b; c d) invertible",
                |p| g(p, "a") * g(p, "d") != g(p, "b") * g(p, "c"),
            ),
            "isomorphic iff C2 = alpha B C1 B^-1 (not decided here); defaults are an implementation choice",
        ),
        with_params(
            tri("T4.3e_ab", 4, "dim 4, item 3e", true, |p| {
                vec![
                    br(&[2, 3, 4], e(1)),
                    br(&[1, 3, 4], vec![(2, g(p, "a"))]),
                    br(&[1, 2, 4], vec![(3, g(p, "b"))]),
                ]
            }),
            &[("a", 1), ("b", 1)],
            "a, b != 0",
            nonzero_all,
        ),
        with_params(
            tri("T4.3f_abc", 4, "dim 4, item 3f", false, |p| {
                vec![
                    br(&[2, 3, 4], e(1)),
                    br(&[1, 3, 4], vec![(2, g(p, "a"))]),
                    br(&[1, 2, 4], vec![(3, g(p, "b"))]),
                    br(&[1, 2, 3], vec![(4, g(p, "c"))]),
                ]
            }),
            &[("a", 1), ("b", 1), ("c", 1)],
            nonzero_abc,
            nonzero_all,
        ),
        tri("T5.1", 5, "dim 5, item 1", true, |_| vec![]),
        tri("T5.2a", 5, "dim 5, item 2a", true, |_| vec![br(&[2, 3, 4], e(1))]),
        tri("T5.2b", 5, "dim 5, item 2b", true, |_| vec![br(&[1, 2, 3], e(1))]),
        tri("T5.3a", 5, "dim 5, item 3a", true, |_| vec![br(&[2, 3, 4], e(1)), br(&[3, 4, 5], e(2))]),
        tri("T5.3b", 5, "dim 5, item 3b", true, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[2, 4, 5], e(2)), br(&[1, 4, 5], e(1))]
        }),
        tri("T5.3c", 5, "dim 5, item 3c", true, |_| vec![br(&[2, 3, 4], e(1)), br(&[1, 3, 4], e(2))]),
        tri("T5.3d", 5, "dim 5, item 3d", true, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[1, 3, 4], e(2)), br(&[2, 4, 5], e(2)), br(&[1, 4, 5], e(1))]
        }),
        with_params(
            tri("T5.3e_alpha", 5, "dim 5, item 3e", true, |p| {
                vec![br(&[2, 3, 4], vec![(1, g(p, "alpha")), (2, q(1))]), br(&[1, 3, 4], e(2))]
            }),
            &[("alpha", 1)],
            "alpha != 0",
            nonzero_all,
        ),
        with_params(
            tri("T5.3f_alpha", 5, "dim 5, item 3f", true, |p| {
                vec![
                    br(&[2, 3, 4], vec![(1, g(p, "alpha")), (2, q(1))]),
                    br(&[1, 3, 4], e(2)),
                    br(&[2, 4, 5], e(2)),
                    br(&[1, 4, 5], e(1)),
                ]
            }),
            &[("alpha", 1)],
            "alpha != 0",
            nonzero_all,
        ),
        tri("T5.3g", 5, "dim 5, item 3g", true, |_| vec![br(&[1, 3, 4], e(1)), br(&[2, 3, 4], e(2))]),
        tri("T5.4a", 5, "dim 5, item 4a", true, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[2, 4, 5], vec![(2, q(-1))]), br(&[3, 4, 5], e(3))]
        }),
        with_params(
            tri("T5.4b_alpha", 5, "dim 5, item 4b", true, |p| {
                vec![
                    br(&[2, 3, 4], e(1)),
                    br(&[3, 4, 5], vec![(3, q(1)), (2, g(p, "alpha"))]),
                    br(&[2, 4, 5], e(3)),
                    br(&[1, 4, 5], e(1)),
                ]
            }),
            &[("alpha", 1)],
            "none",
            always,
        ),
        tri("T5.4c", 5, "dim 5, item 4c", true, |_| {
            vec![
                br(&[2, 3, 4], e(1)),
                br(&[3, 4, 5], e(3)),
                br(&[2, 4, 5], e(2)),
                br(&[1, 4, 5], vec![(1, q(2))]),
            ]
        }),
        tri("T5.4d", 5, "dim 5, item 4d", true, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[1, 3, 4], e(2)), br(&[1, 2, 4], e(3))]
        }),
        with_params(
            tri("T5.4e_beta", 5, "dim 5, item 4e", true, |p| {
                vec![
                    br(&[1, 4, 5], e(1)),
                    br(&[2, 4, 5], e(3)),
                    br(&[3, 4, 5], vec![(2, g(p, "beta")), (3, q(1) + g(p, "beta"))]),
                ]
            }),
            &[("beta", 2)],
            "beta not in {0, 1}",
            |p| {
                let b = g(p, "beta");
                !b.is_zero() && !b.is_one()
            },
        ),
        tri("T5.4f", 5, "dim 5, item 4f", true, |_| {
            vec![br(&[1, 4, 5], e(1)), br(&[2, 4, 5], e(2)), br(&[3, 4, 5], e(3))]
        }),
        with_note(
            with_params(
                tri("T5.4g_stu", 5, "dim 5, item 4g", true, |p| {
                    vec![
                        br(&[1, 4, 5], e(2)),
                        br(&[2, 4, 5], e(3)),
                        br(&[3, 4, 5], vec![(1, g(p, "s")), (2, g(p, "t")), (3, g(p, "u"))]),
                    ]
                }),
                &[("s", 1), ("t", 1), ("u", 1)],
                "none",
                always,
            ),
            "(s,t,u) ~ (r^3 s, r^2 t, r u) for r != 0 (not decided here); defaults are an implementation choice",
        ),
        tri("T5.5a", 5, "dim 5, item 5a", false, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[3, 4, 5], e(2)), br(&[2, 4, 5], e(3)), br(&[2, 3, 5], e(4))]
        }),
        tri("T5.5b", 5, "dim 5, item 5b", false, |_| {
            vec![br(&[2, 3, 4], e(1)), br(&[1, 3, 4], e(2)), br(&[1, 2, 4], e(3)), br(&[1, 2, 3], e(4))]
        }),
    ]
}

/// Every catalog entry: Lie algebras first, then 3-Lie algebras.
pub fn catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| lie_specs().into_iter().chain(trilie_specs()).map(entry).collect())
}

/// Entries filtered by arity and dimension, in catalog order.
pub fn catalog_list(arity: Option<usize>, dim: Option<usize>) -> Vec<&'static CatalogEntry> {
    catalog()
        .iter()
        .filter(|c| arity.map_or(true, |n| c.arity == n) && dim.map_or(true, |d| c.dim == d))
        .collect()
}

pub fn catalog_entry(id: &str) -> Result<&'static CatalogEntry> {
    catalog().iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCatalogId(id.into()))
}

pub fn catalog_get(id: &str, params: &Params) -> Result<StructureConstants> {
    catalog_entry(id)?.instantiate(params)
}

/// Parses bindings like `a=1,b=-1/2`. Empty text gives no bindings.
pub fn parse_params(text: &str) -> Result<Params> {
    let mut out = Params::new();
    for (n, part) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let err = |message: String| Error::Parse { location: format!("params item {}", n + 1), message };
        let (k, v) = part.split_once('=').ok_or_else(|| err(format!("expected name=value, got `{part}`")))?;
        let value = parse_rational(v.trim()).ok_or_else(|| err(format!("bad rational `{}`", v.trim())))?;
        if out.insert(k.trim().to_string(), value).is_some() {
            return Err(err(format!("parameter `{}` given twice", k.trim())));
        }
    }
    Ok(out)
}

pub fn format_params(p: &Params) -> String {
    p.iter().map(|(k, v)| format!("{k}={}", format_rational(v))).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recognition {
    /// 0-based index of the distinguished basis vector.
    pub i0: usize,
    pub lie: StructureConstants,
    pub tau: LinearForm,
}

/// Looks in the given basis for `e_{i0}` such that every nonzero bracket
/// involves `e_{i0}` and `e_{i0}` is independent of the bracket values.
/// A candidate is returned only if it really induces `t`.
pub fn recognize_induced(t: &StructureConstants) -> Option<Recognition> {
    let n = t.arity();
    if n < 3 {
        return None;
    }
    let d = t.dim();
    let values = t.derived_span();
    (0..d).find_map(|i0| {
        if t.entries().any(|(k, _)| !k.contains(&i0)) {
            return None;
        }
        let ei0 = crate::exactlin::unit_vector(d, i0);
        if values.contains(&ei0).ok()? {
            return None;
        }
        let entries = crate::algebra::increasing_tuples(d, n - 1)
            .into_iter()
            .filter(|k| !k.contains(&i0))
            .map(|k| {
                let mut full = vec![i0];
                full.extend(&k);
                (k, t.basis_bracket(&full))
            });
        let lie = StructureConstants::from_increasing(n - 1, d, entries);
        let tau = LinearForm::coordinate(d, i0);
        let ok = lie.verify_identity().is_ok()
            && check_trace(&lie, &tau).is_ok()
            && induce_bracket(&lie, &tau).ok().as_ref() == Some(t);
        ok.then_some(Recognition { i0, lie, tau })
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum InducedFlag {
    Induced,
    NotInduced,
    Unknown,
}

impl InducedFlag {
    pub fn name(self) -> &'static str {
        match self {
            InducedFlag::Induced => "induced",
            InducedFlag::NotInduced => "not-induced",
            InducedFlag::Unknown => "unknown",
        }
    }
}

/// Recognition success, else `D²(t) ≠ 0`, else unknown.
pub fn classify_induced(t: &StructureConstants) -> InducedFlag {
    if recognize_induced(t).is_some() {
        InducedFlag::Induced
    } else if !derived_series(t).term(2).is_zero() {
        InducedFlag::NotInduced
    } else {
        InducedFlag::Unknown
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub id: &'static str,
    pub dim: usize,
    pub flag: InducedFlag,
    pub listed_induced: Option<bool>,
}

impl ClassificationRow {
    /// Whether the computed flag agrees with the listed one, when listed.
    pub fn agrees(&self) -> Option<bool> {
        self.listed_induced.map(|l| match self.flag {
            InducedFlag::Induced => l,
            InducedFlag::NotInduced => !l,
            InducedFlag::Unknown => false,
        })
    }
}

/// Flags every 3-Lie catalog entry of dimension at most `max_dim`, at
/// default parameters.
pub fn induced_classification(max_dim: usize) -> Vec<ClassificationRow> {
    catalog_list(Some(3), None)
        .into_iter()
        .filter(|c| c.dim <= max_dim)
        .map(|c| ClassificationRow {
            id: c.id,
            dim: c.dim,
            flag: classify_induced(&c.default_instance()),
            listed_induced: c.listed_induced,
        })
        .collect()
}

/// Bracket value as a table `e index -> t index -> coefficient`, both 1-based.
pub type SymbolicValue = BTreeMap<usize, BTreeMap<usize, Rational>>;

/// Trace space and induced family of a Lie algebra. A trace is written
/// `Σ t_p b_p` over the canonical basis `b_p`, where `p` is the pivot
/// coordinate of `b_p`, so `t_p` is the `x_p` coefficient of the trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table6Row {
    pub id: String,
    pub weights: Vec<usize>,
    pub trace_basis: Vec<LinearForm>,
    /// Keyed by increasing 1-based triples; zero values are absent.
    pub brackets: BTreeMap<Vec<usize>, SymbolicValue>,
}

fn weight_name(t: usize) -> String {
    format!("t{t}")
}

fn format_symbolic_coeff(terms: &BTreeMap<usize, Rational>) -> (String, bool) {
    let one = Rational::one();
    let parts: Vec<String> = terms
        .iter()
        .map(|(t, c)| {
            if *c == one {
                weight_name(*t)
            } else if *c == -one.clone() {
                format!("-{}", weight_name(*t))
            } else {
                format!("{} {}", format_rational(c), weight_name(*t))
            }
        })
        .collect();
    (parts.join(" + ").replace("+ -", "- "), parts.len() > 1)
}

impl Table6Row {
    pub fn trace_text(&self) -> String {
        if self.weights.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .weights
            .iter()
            .zip(&self.trace_basis)
            .map(|(t, b)| {
                let form = b.to_string();
                if form == format!("x{t}") {
                    format!("{} {form}", weight_name(*t))
                } else {
                    format!("{} ({form})", weight_name(*t))
                }
            })
            .collect();
        parts.join(" + ")
    }

    pub fn bracket_lines(&self) -> Vec<String> {
        self.brackets
            .iter()
            .map(|(k, val)| {
                let tuple: Vec<String> = k.iter().map(|i| format!("e{i}")).collect();
                let parts: Vec<String> = val
                    .iter()
                    .map(|(ei, terms)| {
                        let (c, compound) = format_symbolic_coeff(terms);
                        if compound {
                            format!("({c}) e{ei}")
                        } else {
                            format!("{c} e{ei}")
                        }
                    })
                    .collect();
                format!("[{}] = {}", tuple.join(","), parts.join(" + ").replace("+ -", "- "))
            })
            .collect()
    }
}

impl fmt::Display for Table6Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.id)?;
        writeln!(f, "  trace: {}", self.trace_text())?;
        let lines = self.bracket_lines();
        if lines.is_empty() {
            writeln!(f, "  induced: abelian")?;
        }
        for l in lines {
            writeln!(f, "  {l}")?;
        }
        Ok(())
    }
}

/// Computes the trace row of a Lie algebra.
pub fn table6_of(id: &str, a: &StructureConstants) -> Result<Table6Row> {
    if a.arity() != 2 {
        return Err(Error::Arity { expected: 2, got: a.arity() });
    }
    let space = trace_space(a);
    let weights: Vec<usize> = space.space.pivots().iter().map(|p| p + 1).collect();
    let trace_basis = space.basis();
    let mut brackets: BTreeMap<Vec<usize>, SymbolicValue> = BTreeMap::new();
    for (t, tau) in weights.iter().zip(&trace_basis) {
        let induced = induce_bracket(a, tau)?;
        for (k, v) in induced.entries() {
            let slot = brackets.entry(k.iter().map(|i| i + 1).collect()).or_default();
            for (q, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                slot.entry(q + 1).or_default().insert(*t, c.clone());
            }
        }
    }
    Ok(Table6Row { id: id.into(), weights, trace_basis, brackets })
}

pub fn table6(id: &str, params: &Params) -> Result<Table6Row> {
    table6_of(id, &catalog_get(id, params)?)
}

fn reference_row(id: &str, weights: &[usize], terms: &[(&[usize], usize, usize, Rational)], d: usize) -> Table6Row {
    let mut brackets: BTreeMap<Vec<usize>, SymbolicValue> = BTreeMap::new();
    for (k, ei, t, c) in terms {
        let slot = brackets.entry(k.to_vec()).or_default().entry(*ei).or_default();
        let sum = slot.get(t).cloned().unwrap_or_else(Rational::zero) + c;
        if sum.is_zero() {
            slot.remove(t);
        } else {
            slot.insert(*t, sum);
        }
    }
    for val in brackets.values_mut() {
        val.retain(|_, terms| !terms.is_empty());
    }
    brackets.retain(|_, val| !val.is_empty());
    Table6Row {
        id: id.into(),
        weights: weights.to_vec(),
        trace_basis: weights.iter().map(|t| LinearForm::coordinate(d, t - 1)).collect(),
        brackets,
    }
}

/// The published trace table, transcribed verbatim with the entry's
/// parameters substituted. Terms are `(triple, e index, t index, coefficient)`.
pub fn reference_table6(id: &str, params: &Params) -> Result<Table6Row> {
    let c = catalog_entry(id)?;
    if c.arity != 2 {
        return Err(Error::Arity { expected: 2, got: c.arity });
    }
    let p = c.resolve(params)?;
    let one = q(1);
    let row = |w: &[usize], terms: &[(&[usize], usize, usize, Rational)]| reference_row(id, w, terms, c.dim);
    Ok(match id {
        "L3_abelian" => row(&[1, 2, 3], &[]),
        "M1" => row(&[1, 2, 3, 4], &[]),
        "L(3,-1)" => row(&[1, 3], &[(&[1, 2, 3], 2, 3, one)]),
        "L(3,1)" => row(&[1, 2], &[]),
        "L(3,2,a)" | "L(3,3)" | "L(3,4,a)" => row(&[3], &[]),
        "L(3,5)" | "L(3,6)" => row(&[], &[]),
        "M2" | "M3_a" | "M6_ab" | "M7_ab" => row(&[4], &[]),
        "M3_0" => row(&[2, 4], &[(&[1, 2, 4], 1, 2, q(-1))]),
        "M4" => row(
            &[1, 2, 4],
            &[(&[1, 2, 4], 3, 1, one.clone()), (&[1, 3, 4], 3, 1, one.clone()), (&[2, 3, 4], 3, 2, one)],
        ),
        "M5" => row(&[1, 2, 4], &[(&[1, 2, 4], 3, 1, one)]),
        "M6_0b" => row(
            &[1, 4],
            &[(&[1, 2, 4], 3, 1, one.clone()), (&[1, 3, 4], 2, 1, g(&p, "b")), (&[1, 3, 4], 3, 1, one)],
        ),
        "M7_0b" => row(&[1, 4], &[(&[1, 2, 4], 3, 1, one), (&[1, 3, 4], 2, 1, g(&p, "b"))]),
        "M8" => row(&[1, 3], &[(&[1, 2, 3], 2, 3, one.clone()), (&[1, 3, 4], 4, 1, one)]),
        "M9_a" => row(
            &[3, 4],
            &[
                (&[1, 3, 4], 1, 3, q(-1)),
                (&[1, 3, 4], 2, 3, -g(&p, "a")),
                (&[1, 3, 4], 1, 4, one.clone()),
                (&[2, 3, 4], 1, 3, one.clone()),
                (&[2, 3, 4], 2, 4, one),
            ],
        ),
        "M11" => row(&[4], &[(&[1, 3, 4], 2, 4, one.clone()), (&[2, 3, 4], 1, 4, one)]),
        "M12" | "M13_a" | "M14_a" => row(&[4], &[(&[1, 3, 4], 2, 4, one)]),
        "M13_0" => row(
            &[3, 4],
            &[(&[1, 3, 4], 1, 3, q(-1)), (&[1, 3, 4], 2, 4, one), (&[2, 3, 4], 2, 3, q(-1))],
        ),
        "M14_0" => row(&[3, 4], &[(&[1, 3, 4], 2, 4, one)]),
        "gl2" => row(
            &[4],
            &[(&[1, 2, 4], 2, 4, q(2)), (&[1, 3, 4], 3, 4, q(-2)), (&[2, 3, 4], 1, 4, one)],
        ),
        "E3xK" => row(
            &[4],
            &[(&[1, 2, 4], 3, 4, one.clone()), (&[1, 3, 4], 2, 4, q(-1)), (&[2, 3, 4], 1, 4, one)],
        ),
        other => return Err(Error::UnknownCatalogId(other.into())),
    })
}

/// Human description of an entry and its default instance.
pub fn describe(c: &CatalogEntry) -> String {
    let a = c.default_instance();
    let params = if c.params.is_empty() { String::new() } else { format!(" [{}]", format_params(&c.defaults())) };
    format!("{} ({}-ary, dim {}){}: {}", c.id, c.arity, c.dim, params, a)
}
