//! Named runtime check suites: lifted-generator identities, connection
//! one-form conditions, and block classification. Each check evaluates
//! an exact symbolic identity and reports pass or fail with a short
//! description; nothing here panics on a failed identity.

use crate::normal_forms::{
    compose_blocks, connection_one_form, cotangent_lift, williamson_classify, BlockKind,
    LiftParam, ModelAction, WilliamsonType,
};
use crate::symcalc::{hamiltonian_vector_field, PolyField, PolyForm, PolyFn, Scalar};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, run: impl FnOnce() -> Result<bool, String>) -> Check {
    match run() {
        Ok(passed) => Check {
            name,
            passed,
            detail: if passed { "exact identity holds".to_string() } else { "identity fails".to_string() },
        },
        Err(e) => Check { name, passed: false, detail: e },
    }
}

fn hyperbolic_field() -> Result<PolyField, String> {
    let vars: &[&str] = &["x", "y"];
    let h = &PolyFn::var(vars, 0) * &PolyFn::var(vars, 1);
    let omega = PolyForm::darboux(vars, &[(0, 1)]);
    hamiltonian_vector_field(&h, &omega).map_err(|e| e.to_string())
}

fn elliptic_field() -> Result<PolyField, String> {
    let vars: &[&str] = &["z", "zbar"];
    let h = (&PolyFn::var(vars, 0) * &PolyFn::var(vars, 1)).scale(&Scalar::ratio(1, 2));
    let mut omega = PolyForm::zero(vars, 2);
    omega.add_component(vec![0, 1], PolyFn::constant(vars, &Scalar::i() * &Scalar::ratio(1, 2)));
    hamiltonian_vector_field(&h, &omega).map_err(|e| e.to_string())
}

fn focus_fields() -> Result<(PolyField, PolyField), String> {
    let vars: &[&str] = &["x1", "x2", "y1", "y2"];
    let x1 = PolyFn::var(vars, 0);
    let x2 = PolyFn::var(vars, 1);
    let y1 = PolyFn::var(vars, 2);
    let y2 = PolyFn::var(vars, 3);
    let omega = PolyForm::darboux(vars, &[(0, 2), (1, 3)]);
    let f1 = &(&x1 * &y2) - &(&x2 * &y1);
    let f2 = &(&x1 * &y1) + &(&x2 * &y2);
    let a = hamiltonian_vector_field(&f1, &omega).map_err(|e| e.to_string())?;
    let b = hamiltonian_vector_field(&f2, &omega).map_err(|e| e.to_string())?;
    Ok((a, b))
}

/// The infinitesimal generators of the three lifted model actions agree
/// with the Hamiltonian vector fields of their moment map components.
pub fn lift_generator_checks() -> Vec<Check> {
    vec![
        check("hyperbolic lift generator", || {
            let fam = cotangent_lift(ModelAction::Hyperbolic);
            let gen = fam.generator(LiftParam::T).map_err(|e| e.to_string())?;
            Ok(gen == hyperbolic_field()?)
        }),
        check("elliptic lift generator", || {
            let fam = cotangent_lift(ModelAction::Elliptic);
            let gen = fam.generator(LiftParam::Theta).map_err(|e| e.to_string())?;
            Ok(gen == elliptic_field()?)
        }),
        check("focus-focus lift generators", || {
            let fam = cotangent_lift(ModelAction::FocusFocus);
            let (rot, rad) = focus_fields()?;
            let g_theta = fam.generator(LiftParam::Theta).map_err(|e| e.to_string())?;
            let g_t = fam.generator(LiftParam::T).map_err(|e| e.to_string())?;
            Ok(g_theta == rot && g_t == rad)
        }),
    ]
}

/// Each model connection one-form satisfies its three defining
/// conditions: it differentiates to the symplectic form, vanishes on
/// the moment direction, and evaluates to the moment coordinate on the
/// cyclic direction.
pub fn connection_form_checks() -> Vec<Check> {
    let kinds = [
        ("regular connection form", BlockKind::Regular),
        ("elliptic connection form", BlockKind::Elliptic),
        ("hyperbolic connection form", BlockKind::Hyperbolic),
    ];
    kinds
        .into_iter()
        .map(|(name, kind)| {
            check(name, move || {
                let cf = connection_one_form(kind).map_err(|e| e.to_string())?;
                let conditions = cf.verify().map_err(|e| e.to_string())?;
                Ok(conditions == [true, true, true])
            })
        })
        .collect()
}

/// The classifier recognizes the three model blocks, and every block
/// product up to half-dimension 4 is involutive.
pub fn block_checks() -> Vec<Check> {
    vec![
        check("hyperbolic block classified", || {
            let vars: &[&str] = &["x", "y"];
            let f = &PolyFn::var(vars, 0) * &PolyFn::var(vars, 1);
            let omega = PolyForm::darboux(vars, &[(0, 1)]);
            let kind = williamson_classify(&[f], &omega).map_err(|e| e.to_string())?;
            Ok(kind == BlockKind::Hyperbolic)
        }),
        check("elliptic block classified", || {
            let vars: &[&str] = &["x", "y"];
            let x = PolyFn::var(vars, 0);
            let y = PolyFn::var(vars, 1);
            let f = &(&x * &x) + &(&y * &y);
            let omega = PolyForm::darboux(vars, &[(0, 1)]);
            let kind = williamson_classify(&[f], &omega).map_err(|e| e.to_string())?;
            Ok(kind == BlockKind::Elliptic)
        }),
        check("focus-focus block classified", || {
            let vars: &[&str] = &["x1", "x2", "y1", "y2"];
            let x1 = PolyFn::var(vars, 0);
            let x2 = PolyFn::var(vars, 1);
            let y1 = PolyFn::var(vars, 2);
            let y2 = PolyFn::var(vars, 3);
            let f1 = &(&x1 * &y2) - &(&x2 * &y1);
            let f2 = &(&x1 * &y1) + &(&x2 * &y2);
            let omega = PolyForm::darboux(vars, &[(0, 2), (1, 3)]);
            let kind = williamson_classify(&[f1, f2], &omega).map_err(|e| e.to_string())?;
            Ok(kind == BlockKind::FocusFocus)
        }),
        check("block products involutive up to half-dimension 4", || {
            for n in 1..=4usize {
                for k in 0..=n {
                    for e in 0..=(n - k) {
                        for h in 0..=(n - k - e) {
                            let rem = n - k - e - h;
                            if rem % 2 != 0 {
                                continue;
                            }
                            let wt = WilliamsonType::new(n, k, e, h, rem / 2)
                                .map_err(|err| err.to_string())?;
                            let sys = compose_blocks(&wt).map_err(|err| err.to_string())?;
                            if !sys.is_involutive().map_err(|err| err.to_string())? {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
            Ok(true)
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass() {
        for suite in [lift_generator_checks(), connection_form_checks(), block_checks()] {
            for c in suite {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn suite_shapes() {
        assert_eq!(lift_generator_checks().len(), 3);
        assert_eq!(connection_form_checks().len(), 3);
        assert_eq!(block_checks().len(), 4);
    }
}
