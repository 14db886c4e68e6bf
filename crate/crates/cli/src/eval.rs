//! Evaluation of group specs to groups and subgroups.

use std::sync::Arc;

use eqorder_core::constructions::*;
use eqorder_core::grp::{AutomorphismAction, Elem, Group, Perm, Subgroup};
use eqorder_core::structure::{center_of, derived_subgroup, fitting_subgroup};
use eqorder_core::Error;

use crate::error::CliError;
use crate::spec::{Param, Spec, Word};

/// Result of evaluating a spec.
#[derive(Debug, Clone)]
pub enum Value {
    /// A group, with the construction's designated normal subgroup if it has one.
    Group { group: Arc<Group>, kernel: Option<Subgroup> },
    Sub(Subgroup),
}

impl Value {
    pub fn group(&self) -> Arc<Group> {
        match self {
            Value::Group { group, .. } => group.clone(),
            Value::Sub(s) if s.is_whole() => s.group().clone(),
            Value::Sub(s) => s.as_group().0,
        }
    }

    pub fn kernel(&self) -> Option<&Subgroup> {
        match self {
            Value::Group { kernel, .. } => kernel.as_ref(),
            Value::Sub(_) => None,
        }
    }
}

/// Bindings for `ambient` and `kernel`.
#[derive(Debug, Clone, Default)]
pub struct Env {
    pub ambient: Option<Value>,
}

impl Env {
    pub fn with_ambient(v: Value) -> Env {
        Env { ambient: Some(v) }
    }
}

pub fn evaluate(spec: &Spec, env: &Env) -> Result<Value, CliError> {
    match spec {
        Spec::Call { name, params } => call(spec, name, params, env),
        Spec::Product(a, b) => {
            let va = evaluate(a, env)?;
            let vb = evaluate(b, env)?;
            let (ga, gb) = (va.group(), vb.group());
            let g = Group::direct_product(&ga, &gb).map_err(|e| CliError::eval(spec, e))?;
            let kernel = match (va.kernel(), vb.kernel()) {
                (Some(n1), Some(n2)) => Some(embed_direct(&g, n1.generators(), n2.generators())),
                _ => None,
            };
            Ok(Value::Group { group: g, kernel })
        }
        Spec::Perm { degree, gens } => {
            let perms = gens
                .iter()
                .map(|cycles| Perm::from_cycles(*degree as usize, cycles))
                .collect::<eqorder_core::Result<Vec<_>>>()
                .map_err(|e| CliError::eval(spec, e))?;
            let g = Group::from_permutations("perm", *degree as usize, &perms).map_err(|e| CliError::eval(spec, e))?;
            Ok(Value::Group { group: g, kernel: None })
        }
        Spec::Semidirect { kernel, acting, images } => {
            let k = evaluate(kernel, env)?.group();
            let h = evaluate(acting, env)?.group();
            if images.len() != h.generators().len() {
                return Err(CliError::eval(
                    spec,
                    Error::InvalidParameter(format!(
                        "{} image lists for {} acting generators",
                        images.len(),
                        h.generators().len()
                    )),
                ));
            }
            let imgs = images
                .iter()
                .map(|ws| ws.iter().map(|w| eval_word(&k, w)).collect::<eqorder_core::Result<Vec<_>>>())
                .collect::<eqorder_core::Result<Vec<_>>>()
                .map_err(|e| CliError::eval(spec, e))?;
            let action = AutomorphismAction::from_generator_images(h, k.clone(), &imgs).map_err(|e| CliError::eval(spec, e))?;
            let g = Group::semidirect_product(action).map_err(|e| CliError::eval(spec, e))?;
            let n = embed_kernel(&g, k.generators());
            Ok(Value::Group { group: g, kernel: Some(n) })
        }
        Spec::Subgroup { group, words } => {
            let g = evaluate(group, env)?.group();
            let seeds = words.iter().map(|w| eval_word(&g, w)).collect::<eqorder_core::Result<Vec<_>>>();
            let seeds = seeds.map_err(|e| CliError::eval(spec, e))?;
            Ok(Value::Sub(Subgroup::closure(&g, &seeds)))
        }
    }
}

/// Evaluates `--normal`-style specs: the result must be a subgroup of `ambient`.
pub fn evaluate_subgroup(spec: &Spec, ambient: &Value) -> Result<Subgroup, CliError> {
    // pin the ambient group so that every mention of `ambient` shares one instance
    let g = ambient.group();
    let pinned = Value::Group { group: g.clone(), kernel: ambient.kernel().cloned() };
    match evaluate(spec, &Env::with_ambient(pinned))? {
        Value::Sub(s) if Arc::ptr_eq(s.group(), &g) => Ok(s),
        Value::Group { group, .. } if Arc::ptr_eq(&group, &g) => Ok(Subgroup::whole(&g)),
        _ => Err(CliError::Usage(format!("`{spec}` does not evaluate to a subgroup of the ambient group"))),
    }
}

fn eval_word(g: &Arc<Group>, w: &Word) -> eqorder_core::Result<Elem> {
    let mut x = g.identity();
    for &(i, e) in w {
        let gen = *g.generators().get(i).ok_or_else(|| {
            Error::NotAnElement(format!("generator {} of a group with {} generators", i + 1, g.generators().len()))
        })?;
        x = g.mul(x, g.pow(gen, e));
    }
    Ok(x)
}

fn arity(name: &str, params: &[Param], allowed: &[usize], expected: &str) -> Result<(), CliError> {
    if allowed.contains(&params.len()) {
        Ok(())
    } else {
        Err(CliError::ArityMismatch { name: name.into(), expected: expected.into(), got: params.len() })
    }
}

fn int(spec: &Spec, p: &Param) -> Result<u64, CliError> {
    match p {
        Param::Int(n) => Ok(*n),
        Param::Power(b, e) => b.checked_pow(*e).ok_or_else(|| {
            CliError::eval(spec, Error::InvalidParameter(format!("{b}^{e} overflows")))
        }),
        _ => Err(CliError::eval(spec, Error::InvalidParameter(format!("expected an integer, got {p}")))),
    }
}

fn sub_spec<'a>(spec: &Spec, p: &'a Param) -> Result<&'a Spec, CliError> {
    match p {
        Param::Spec(s) => Ok(s),
        _ => Err(CliError::eval(spec, Error::InvalidParameter(format!("expected a group spec, got {p}")))),
    }
}

fn pair_value(spec: &Spec, p: eqorder_core::Result<NamedPair>) -> Result<Value, CliError> {
    let p = p.map_err(|e| CliError::eval(spec, e))?;
    Ok(Value::Group { group: p.group().clone(), kernel: Some(p.n) })
}

fn plain(spec: &Spec, g: eqorder_core::Result<Arc<Group>>) -> Result<Value, CliError> {
    Ok(Value::Group { group: g.map_err(|e| CliError::eval(spec, e))?, kernel: None })
}

fn call(spec: &Spec, name: &str, params: &[Param], env: &Env) -> Result<Value, CliError> {
    let one_int = |params: &[Param]| -> Result<usize, CliError> {
        arity(name, params, &[1], "1 integer")?;
        Ok(int(spec, &params[0])? as usize)
    };
    match name {
        "paper.f20" | "paper.frob72" | "paper.s3xa4" | "paper.mixed" | "paper.a6c8" => {
            arity(name, params, &[0], "no arguments")?;
            pair_value(
                spec,
                match name {
                    "paper.f20" => build_f20(),
                    "paper.frob72" => build_frob72(),
                    "paper.s3xa4" => build_s3xa4(),
                    "paper.mixed" => build_mixed_pair().map(|m| m.pair),
                    _ => build_a6_c8().map(|a| a.pair),
                },
            )
        }
        "paper.natural" => {
            let q = one_int(params)?;
            pair_value(spec, build_natural_pair(q as u64))
        }
        "cyclic" => plain(spec, cyclic(one_int(params)?)),
        "dihedral" => plain(spec, dihedral(one_int(params)?)),
        "genq" => plain(spec, generalized_quaternion(one_int(params)?)),
        "sym" => plain(spec, sym(one_int(params)?)),
        "alt" => plain(spec, alt(one_int(params)?)),
        "elemab" => {
            arity(name, params, &[2], "2 integers (p, k)")?;
            plain(spec, elementary_abelian(int(spec, &params[0])?, int(spec, &params[1])? as usize))
        }
        "abelian" => {
            if params.is_empty() {
                return Err(CliError::ArityMismatch { name: name.into(), expected: "at least 1 integer".into(), got: 0 });
            }
            let orders = params.iter().map(|p| int(spec, p)).collect::<Result<Vec<_>, _>>()?;
            plain(spec, abelian(&orders))
        }
        "sl2" => {
            arity(name, params, &[1], "1 field order (q, p^n or gf(p^n))")?;
            let q = match &params[0] {
                Param::Field(p, n) => p.checked_pow(*n).unwrap_or(u64::MAX),
                p => int(spec, p)?,
            };
            plain(spec, sl2(q))
        }
        "extraspecial" => {
            let n = one_int(params)?;
            if n != 27 {
                return Err(CliError::eval(spec, Error::InvalidParameter("only extraspecial(27) is built".into())));
            }
            plain(spec, extraspecial_27())
        }
        "affine" => {
            arity(name, params, &[2], "2 integers (q, d)")?;
            let (g, k, _) = affine_frobenius(int(spec, &params[0])?, int(spec, &params[1])?)
                .map_err(|e| CliError::eval(spec, e))?;
            Ok(Value::Group { group: g, kernel: Some(k) })
        }
        "ambient" => {
            arity(name, params, &[0], "no arguments")?;
            env.ambient.clone().ok_or_else(|| CliError::Usage("`ambient` is only available inside a subgroup spec".into()))
        }
        "kernel" => {
            arity(name, params, &[0], "no arguments")?;
            let ambient = env.ambient.as_ref().ok_or_else(|| {
                CliError::Usage("`kernel` is only available inside a subgroup spec".into())
            })?;
            ambient
                .kernel()
                .cloned()
                .map(Value::Sub)
                .ok_or_else(|| CliError::Usage("the ambient group has no designated normal subgroup".into()))
        }
        "center" | "derived" | "fitting" => {
            arity(name, params, &[1], "1 group spec")?;
            // a subgroup argument stays inside its ambient group
            let h = match evaluate(sub_spec(spec, &params[0])?, env)? {
                Value::Sub(s) => s,
                v => Subgroup::whole(&v.group()),
            };
            Ok(Value::Sub(match name {
                "center" => center_of(&h),
                "derived" => derived_subgroup(&h),
                _ => fitting_subgroup(&h),
            }))
        }
        "quotient" => {
            arity(name, params, &[2], "2 group specs (G, N)")?;
            let g = evaluate(sub_spec(spec, &params[0])?, env)?;
            let n = evaluate_subgroup(sub_spec(spec, &params[1])?, &g)?;
            let (q, _) = n.quotient().map_err(|e| CliError::eval(spec, e))?;
            Ok(Value::Group { group: q, kernel: None })
        }
        "pair" => {
            arity(name, params, &[2], "2 group specs (G, N)")?;
            let g = evaluate(sub_spec(spec, &params[0])?, env)?;
            let group = g.group();
            let g = Value::Group { group: group.clone(), kernel: g.kernel().cloned() };
            let n = evaluate_subgroup(sub_spec(spec, &params[1])?, &g)?;
            Ok(Value::Group { group, kernel: Some(n) })
        }
        _ => Err(CliError::UnknownConstruction(name.into())),
    }
}
