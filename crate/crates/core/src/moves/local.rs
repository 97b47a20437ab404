use crate::monoid::Element;
use crate::name::{GeneratorId, Label};
use crate::structures::{BergmanPresentation, Colour, ColouredRelation};

use super::{finish, relation_of, require_basic, require_declared, MoveError};

/// Removes generator `x` and relation `k`, substituting `x ↦ repl` in every
/// remaining relation side.
fn remove_and_substitute(
    p: &BergmanPresentation,
    x: &str,
    k: usize,
    repl: &Element,
) -> Result<BergmanPresentation, MoveError> {
    let mut raw = p.to_raw();
    raw.relations.remove(k);
    raw.generators.retain(|g| g.as_str() != x);
    for r in &mut raw.relations {
        r.lhs = r.lhs.substitute(x, repl);
        r.rhs = r.rhs.substitute(x, repl);
    }
    finish(raw)
}

/// Absorbs blue relation `label` (`x = b`) by substituting `x ↦ b`
/// everywhere and dropping `x`.
pub fn enqueue(p: &BergmanPresentation, label: &str) -> Result<BergmanPresentation, MoveError> {
    let (k, r) = relation_of(p, label)?;
    if r.colour != Colour::Blue {
        return Err(MoveError::WrongColour {
            label: r.label.clone(),
            expected: Colour::Blue,
        });
    }
    let x = r
        .lhs
        .as_single_generator()
        .ok_or_else(|| MoveError::NotSingleGenerator(r.label.clone()))?;
    remove_and_substitute(p, x.as_str(), k, &r.rhs)
}

/// Why `x` fails to be lonely via relation `k`, if it does.
fn loneliness_failure(p: &BergmanPresentation, x: &str, k: usize) -> Option<String> {
    let r = &p.relations()[k];
    if r.lhs.as_single_generator().map(|g| g.as_str()) != Some(x) {
        return Some(format!("lhs of `{}` is not `{x}`", r.label));
    }
    if r.rhs.contains_generator(x) {
        return Some(format!("`{x}` is a summand of the rhs of `{}`", r.label));
    }
    p.relations()
        .iter()
        .enumerate()
        .find(|(j, o)| *j != k && o.mentions(x))
        .map(|(_, o)| format!("`{x}` also occurs in `{}`", o.label))
}

/// All `(x, label)` with `x` lonely via relation `label`, in relation order.
pub fn find_lonely(p: &BergmanPresentation) -> Result<Vec<(GeneratorId, Label)>, MoveError> {
    require_basic(p)?;
    Ok(p.relations()
        .iter()
        .enumerate()
        .filter_map(|(k, r)| {
            let x = r.lhs.as_single_generator()?;
            loneliness_failure(p, x.as_str(), k)
                .is_none()
                .then(|| (x.clone(), r.label.clone()))
        })
        .collect())
}

/// Removes a lonely generator and the relation it is the lhs of.
pub fn lonely_eliminate(
    p: &BergmanPresentation,
    x: &str,
) -> Result<BergmanPresentation, MoveError> {
    require_basic(p)?;
    if !p.has_generator(x) {
        return Err(MoveError::UnknownGenerator(x.to_string()));
    }
    let not_lonely = |reason: String| MoveError::NotLonely {
        generator: crate::Name::new(x).expect("declared generator"),
        reason,
    };
    let k = p
        .relations()
        .iter()
        .position(|r| r.lhs.as_single_generator().map(|g| g.as_str()) == Some(x))
        .ok_or_else(|| not_lonely(format!("no relation has lhs `{x}`")))?;
    if let Some(reason) = loneliness_failure(p, x, k) {
        return Err(not_lonely(reason));
    }
    let mut raw = p.to_raw();
    raw.relations.remove(k);
    raw.generators.retain(|g| g.as_str() != x);
    finish(raw)
}

/// Adds generator `generator` and red relation `label: generator = rhs`; the
/// inverse of lonely elimination.
pub fn extend(
    p: &BergmanPresentation,
    generator: &GeneratorId,
    rhs: &Element,
    label: &Label,
) -> Result<BergmanPresentation, MoveError> {
    require_basic(p)?;
    if p.has_generator(generator.as_str()) {
        return Err(MoveError::NameClash(generator.clone()));
    }
    if p.has_label(label.as_str()) {
        return Err(MoveError::NameClash(label.clone()));
    }
    if rhs.is_zero() {
        return Err(MoveError::ZeroSide);
    }
    require_declared(p, rhs)?;
    let mut raw = p.to_raw();
    raw.generators.push(generator.clone());
    raw.relations.push(ColouredRelation::red(
        label.clone(),
        Element::generator(generator.clone()),
        rhs.clone(),
    ));
    finish(raw)
}

/// Folds `x` into `b_i` along relation `label: x = b_i`.
pub fn collapse(
    p: &BergmanPresentation,
    x: &str,
    label: &str,
) -> Result<BergmanPresentation, MoveError> {
    require_basic(p)?;
    let (k, r) = relation_of(p, label)?;
    if r.lhs.as_single_generator().map(|g| g.as_str()) != Some(x) {
        return Err(MoveError::Precondition(format!(
            "lhs of `{label}` is not `{x}`"
        )));
    }
    if r.rhs.contains_generator(x) {
        return Err(MoveError::Precondition(format!(
            "`{x}` is a summand of the rhs of `{label}`"
        )));
    }
    remove_and_substitute(p, x, k, &r.rhs)
}
