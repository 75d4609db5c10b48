//! Instance configuration files.
//!
//! A config is TOML with sections `[ring]`, `[group]` and `[action]`; see the
//! README for the grammar. Ring and group elements are referred to by their
//! labels, and every error carries the line and column it comes from.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;

use partgal::finring::{Elem, FiniteRing};
use partgal::fixtures::{automorphism_order, canonical_name, fixture, fixture_parent, permutation_frobenius};
use partgal::groups::{FiniteGroup, GroupElem};
use partgal::partial_action::{restrict_global, ActionCandidate, ActionError, GlobalAction, PartialAction};
use partgal::{make_group, make_ring, GroupDescriptor, RingDescriptor};
use serde::Deserialize;
use toml::Spanned;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError {
    pub source_name: String,
    /// 1-based line and column, when the error has a location.
    pub location: Option<(usize, usize)>,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.location {
            Some((line, col)) => write!(f, "{}:{line}:{col}: {}", self.source_name, self.message),
            None => write!(f, "{}: {}", self.source_name, self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

/// 1-based line and column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    ring: RingDescriptor,
    group: Option<GroupDescriptor>,
    action: ActionSection,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ActionSection {
    kind: Spanned<String>,
    permutation: Option<Spanned<Vec<usize>>>,
    frobenius: Option<Spanned<Vec<u32>>>,
    restrict: Option<Spanned<String>>,
    generators: Option<Vec<GeneratorMap>>,
    elements: Option<Vec<ExplicitEntry>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GeneratorMap {
    g: Spanned<String>,
    map: Vec<(Spanned<String>, Spanned<String>)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExplicitEntry {
    g: Spanned<String>,
    one: Spanned<String>,
    alpha: Vec<(Spanned<String>, Spanned<String>)>,
}

/// A ring, a group and a candidate action, possibly not yet valid.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub ring: FiniteRing,
    pub group: FiniteGroup,
    pub candidate: ActionCandidate,
    /// The global action this instance is, or is restricted from.
    pub parent: Option<GlobalAction>,
}

impl Instance {
    pub fn action(&self) -> Result<PartialAction, ActionError> {
        PartialAction::new(self.ring.clone(), self.group.clone(), self.candidate.clone())
    }

    fn from_action(name: String, act: &PartialAction, parent: Option<GlobalAction>) -> Instance {
        Instance { name, ring: act.ring().clone(), group: act.group().clone(), candidate: act.to_candidate(), parent }
    }
}

pub fn load_fixture(name: &str) -> Result<Instance, ConfigError> {
    let act = fixture(name).ok_or_else(|| ConfigError {
        source_name: "--fixture".into(),
        location: None,
        message: format!("unknown fixture {name:?}"),
    })?;
    let canonical = canonical_name(name).expect("fixture exists");
    Ok(Instance::from_action(canonical.to_string(), &act, fixture_parent(canonical)))
}

struct Ctx<'t> {
    name: &'t str,
    text: &'t str,
}

impl Ctx<'_> {
    fn at(&self, span: Range<usize>, message: impl Into<String>) -> ConfigError {
        ConfigError {
            source_name: self.name.into(),
            location: Some(line_col(self.text, span.start)),
            message: message.into(),
        }
    }

    fn plain(&self, message: impl Into<String>) -> ConfigError {
        ConfigError { source_name: self.name.into(), location: None, message: message.into() }
    }

    fn elem(&self, ring: &FiniteRing, label: &Spanned<String>) -> Result<Elem, ConfigError> {
        ring.find_label(label.get_ref())
            .ok_or_else(|| self.at(label.span(), format!("no ring element labelled {:?}", label.get_ref())))
    }

    fn group_elem(&self, group: &FiniteGroup, label: &Spanned<String>) -> Result<GroupElem, ConfigError> {
        group
            .find_label(label.get_ref())
            .ok_or_else(|| self.at(label.span(), format!("no group element labelled {:?}", label.get_ref())))
    }

    fn total_map(
        &self,
        ring: &FiniteRing,
        pairs: &[(Spanned<String>, Spanned<String>)],
    ) -> Result<Vec<Elem>, ConfigError> {
        let mut map: Vec<Option<Elem>> = vec![None; ring.order()];
        for (a, b) in pairs {
            let (x, y) = (self.elem(ring, a)?, self.elem(ring, b)?);
            if map[x.idx()].replace(y).is_some() {
                return Err(self.at(a.span(), format!("{:?} is mapped twice", a.get_ref())));
            }
        }
        map.iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| self.plain(format!("map leaves {:?} unassigned", ring.label(Elem(i as u32)))))
            })
            .collect()
    }
}

/// Parses a config; `name` is used in error messages.
pub fn parse_config(name: &str, text: &str) -> Result<Instance, ConfigError> {
    let ctx = Ctx { name, text };
    let file: ConfigFile = toml::from_str(text).map_err(|e| ConfigError {
        source_name: name.into(),
        location: e.span().map(|s| line_col(text, s.start)),
        message: e.message().to_string(),
    })?;
    let ring = make_ring(&file.ring).map_err(|e| ctx.plain(format!("[ring]: {e}")))?;
    let group = file.group.as_ref().map(make_group).transpose().map_err(|e| ctx.plain(format!("[group]: {e}")))?;
    let act = &file.action;
    let kind = act.kind.get_ref().as_str();
    let unused = |present: bool, field: &str| -> Result<(), ConfigError> {
        if present {
            Err(ctx.at(act.kind.span(), format!("field `{field}` does not apply to action kind {kind:?}")))
        } else {
            Ok(())
        }
    };
    let global = match kind {
        "global" => {
            unused(act.generators.is_some(), "generators")?;
            unused(act.elements.is_some(), "elements")?;
            let factors = match &file.ring {
                RingDescriptor::Product { factors } => factors.clone(),
                single => vec![single.clone()],
            };
            let perm = act.permutation.as_ref().map_or_else(|| (0..factors.len()).collect(), |p| p.get_ref().clone());
            let frob = act.frobenius.as_ref().map_or_else(|| vec![0; factors.len()], |f| f.get_ref().clone());
            // point at whichever table was given, permutation first
            let span = act
                .permutation
                .as_ref()
                .map(|p| p.span())
                .or_else(|| act.frobenius.as_ref().map(|f| f.span()))
                .unwrap_or_else(|| act.kind.span());
            let sigma = permutation_frobenius(&ring, &factors, &perm, &frob)
                .map_err(|e| ctx.at(span, format!("permutation/frobenius: {e}")))?;
            let group = match group {
                Some(g) => g,
                None => FiniteGroup::cyclic(automorphism_order(&sigma)).map_err(|e| ctx.plain(e.to_string()))?,
            };
            let n = group.order();
            let gen = group
                .elements()
                .find(|&g| group.element_order(g) == n)
                .ok_or_else(|| ctx.plain("action kind \"global\" needs a cyclic [group]"))?;
            // σ is assigned to the generator; the group must be cyclic of order a multiple of ord(σ)
            let mut tables = vec![Vec::new(); n];
            let mut cur: Vec<Elem> = ring.elements().collect();
            let mut g = group.identity();
            for _ in 0..n {
                tables[g] = cur.clone();
                cur = cur.iter().map(|x| sigma[x.idx()]).collect();
                g = group.mul(g, gen);
            }
            GlobalAction::new(ring.clone(), group, tables).map_err(|e| ctx.at(act.kind.span(), e.to_string()))?
        }
        "automorphisms" => {
            unused(act.permutation.is_some(), "permutation")?;
            unused(act.frobenius.is_some(), "frobenius")?;
            unused(act.elements.is_some(), "elements")?;
            let group =
                group.ok_or_else(|| ctx.at(act.kind.span(), "action kind \"automorphisms\" needs a [group]"))?;
            let gens = act.generators.as_ref().ok_or_else(|| ctx.at(act.kind.span(), "missing `generators`"))?;
            let mut known: BTreeMap<GroupElem, Vec<Elem>> = BTreeMap::new();
            known.insert(group.identity(), ring.elements().collect());
            let mut given = Vec::new();
            for gm in gens {
                let g = ctx.group_elem(&group, &gm.g)?;
                given.push((g, ctx.total_map(&ring, &gm.map)?, gm.g.span()));
            }
            // close up: σ_{as} = σ_a ∘ σ_s
            let mut frontier = vec![group.identity()];
            while let Some(a) = frontier.pop() {
                for (s, sig, span) in &given {
                    let prod = group.mul(a, *s);
                    let comp: Vec<Elem> = (0..ring.order()).map(|r| known[&a][sig[r].idx()]).collect();
                    match known.get(&prod) {
                        Some(existing) if *existing != comp => {
                            return Err(ctx.at(
                                span.clone(),
                                format!(
                                    "the generator maps do not define a homomorphism (two values for {})",
                                    group.label(prod)
                                ),
                            ));
                        }
                        Some(_) => {}
                        None => {
                            known.insert(prod, comp);
                            frontier.push(prod);
                        }
                    }
                }
            }
            if known.len() != group.order() {
                return Err(ctx.at(act.kind.span(), "the listed generators do not generate the group"));
            }
            let tables = known.into_values().collect();
            GlobalAction::new(ring.clone(), group, tables).map_err(|e| ctx.at(act.kind.span(), e.to_string()))?
        }
        "explicit" => {
            unused(act.permutation.is_some(), "permutation")?;
            unused(act.frobenius.is_some(), "frobenius")?;
            unused(act.generators.is_some(), "generators")?;
            unused(act.restrict.is_some(), "restrict")?;
            let group = group.ok_or_else(|| ctx.at(act.kind.span(), "action kind \"explicit\" needs a [group]"))?;
            let entries = act.elements.as_ref().ok_or_else(|| ctx.at(act.kind.span(), "missing `elements`"))?;
            let mut one_g = vec![None; group.order()];
            let mut alpha = vec![BTreeMap::new(); group.order()];
            for entry in entries {
                let g = ctx.group_elem(&group, &entry.g)?;
                if one_g[g].replace(ctx.elem(&ring, &entry.one)?).is_some() {
                    return Err(ctx.at(entry.g.span(), format!("group element {:?} listed twice", entry.g.get_ref())));
                }
                for (a, b) in &entry.alpha {
                    let (x, y) = (ctx.elem(&ring, a)?, ctx.elem(&ring, b)?);
                    if alpha[g].insert(x, y).is_some() {
                        return Err(ctx.at(a.span(), format!("{:?} is mapped twice", a.get_ref())));
                    }
                }
            }
            let one_g = one_g
                .into_iter()
                .enumerate()
                .map(|(g, v)| v.ok_or_else(|| ctx.plain(format!("no entry for group element {:?}", group.label(g)))))
                .collect::<Result<Vec<_>, _>>()?;
            let name = name.to_string();
            return Ok(Instance { name, ring, group, candidate: ActionCandidate { one_g, alpha }, parent: None });
        }
        other => {
            return Err(ctx.at(
                act.kind.span(),
                format!("unknown action kind {other:?}; expected \"global\", \"automorphisms\" or \"explicit\""),
            ))
        }
    };
    let instance_name = name.to_string();
    match &act.restrict {
        None => Ok(Instance::from_action(instance_name, &global.as_partial(), Some(global))),
        Some(label) => {
            let e = ctx.elem(global.ring(), label)?;
            let e = global
                .ring()
                .idempotent(e)
                .ok_or_else(|| ctx.at(label.span(), format!("{:?} is not an idempotent", label.get_ref())))?;
            let restricted = restrict_global(&global, e);
            Ok(Instance::from_action(instance_name, &restricted, Some(global)))
        }
    }
}

/// A 2-cochain listed as lines `g h value` of labels; unlisted pairs take
/// the identity value. Returns the values in tuple order.
pub fn parse_twist(name: &str, text: &str, action: &PartialAction) -> Result<Vec<Elem>, ConfigError> {
    let ring = action.ring();
    let group = action.group();
    let mut values: Vec<Elem> = (0..group.tuple_count(2))
        .map(|s| {
            let t = group.tuple(2, s);
            ring.mul(action.one(t[0]), action.one(group.mul(t[0], t[1])))
        })
        .collect();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let content = line.split('#').next().unwrap_or("");
        let mut fields = Vec::new();
        let mut pos = 0;
        for word in content.split_whitespace() {
            let start = content[pos..].find(word).expect("word occurs") + pos;
            fields.push((word, offset + start));
            pos = start + word.len();
        }
        let err = |at: usize, message: String| ConfigError {
            source_name: name.into(),
            location: Some(line_col(text, at)),
            message,
        };
        match fields.as_slice() {
            [] => {}
            [(a, pa), (b, pb), (v, pv)] => {
                let g = group.find_label(a).ok_or_else(|| err(*pa, format!("no group element labelled {a:?}")))?;
                let h = group.find_label(b).ok_or_else(|| err(*pb, format!("no group element labelled {b:?}")))?;
                let x = ring.find_label(v).ok_or_else(|| err(*pv, format!("no ring element labelled {v:?}")))?;
                values[group.tuple_index(&[g, h])] = x;
            }
            [(_, p), ..] => return Err(err(*p, "expected three fields: g h value".into())),
        }
        offset += line.len();
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_shift_with_restriction() {
        let text = r#"
[ring]
kind = "product"
factors = [{ kind = "zmod", n = 2 }, { kind = "zmod", n = 2 }, { kind = "zmod", n = 2 }]

[action]
kind = "global"
permutation = [1, 2, 0]
restrict = "(1,1,0)"
"#;
        let inst = parse_config("e1.toml", text).unwrap();
        let act = inst.action().unwrap();
        assert_eq!(act.ring().order(), 4);
        assert_eq!(act.orbit_report().domain_sizes(), vec![4, 2, 2]);
        let e1 = load_fixture("E1").unwrap();
        assert_eq!(inst.candidate, e1.candidate);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_config("bad.toml", "[ring]\nkind = \"zmod\"\nn = \n").unwrap_err();
        assert_eq!(err.location.map(|l| l.0), Some(3));
        let text = "[ring]\nkind = \"zmod\"\nn = 2\n[group]\nkind = \"cyclic\"\nn = 2\n[action]\nkind = \"explicit\"\nelements = [\n  { g = \"1\", one = \"1\", alpha = [[\"0\", \"0\"], [\"1\", \"7\"]] },\n]\n";
        let err = parse_config("bad.toml", text).unwrap_err();
        assert_eq!(err.location, Some((10, 52)));
        assert!(err.message.contains("\"7\""));
    }

    #[test]
    fn automorphisms_close_under_composition() {
        let text = r#"
[ring]
kind = "gf"
p = 2
poly = [1, 1, 1]

[group]
kind = "cyclic"
n = 2

[action]
kind = "automorphisms"
generators = [{ g = "g", map = [["0", "0"], ["1", "1"], ["x", "x+1"], ["x+1", "x"]] }]
"#;
        let inst = parse_config("frob.toml", text).unwrap();
        assert!(inst.action().unwrap().is_global());
        let bad = text.replace("[\"x\", \"x+1\"]", "[\"x\", \"1\"]");
        assert!(parse_config("frob.toml", &bad).is_err());
    }
}
