//! Textual descriptions of groups.
//!
//! Two equivalent styles are accepted:
//!
//! * family:parameter form, e.g. `D:2m=12`, `QD:2^4`, `M:r=5,s=2`,
//!   `Q:4n=16`, `U:6n=18`, `SD:8n=24`, `V:8n=16`, `F:p=7,q=3`, `HV:n=2`,
//!   `HP:n=1,p=3`, `Z:4`;
//! * canonical names as printed by the builders, e.g. `D12`, `QD16`,
//!   `M(r=5,s=2)`, `Q16`, `U18`, `SD24`, `V16`, `F(7,3)`, `HV(2)`,
//!   `HP(1,3)`, `Z4`, plus the fixed groups `S4`, `A4`, `A5`, `SL23`,
//!   `M16`, `Pauli16`, `SG16_3`.
//!
//! Direct products are written `prod(A,B,...)` or with an infix `x`
//! (`A4xZ2`). Matching is case-insensitive.

use super::{build, Group, GroupError};

pub fn parse_group_spec(input: &str) -> Result<Group, GroupError> {
    let s = input.trim();
    if s.is_empty() {
        return Err(GroupError::Parse("empty group description".into()));
    }

    if let Some(inner) = strip_call_ci(s, "prod") {
        let parts = split_top_level(inner, ',');
        if parts.is_empty() {
            return Err(GroupError::Parse(format!("empty product in {:?}", s)));
        }
        let mut acc = parse_group_spec(parts[0])?;
        for part in &parts[1..] {
            acc = acc.direct_product(&parse_group_spec(part)?)?;
        }
        return Ok(acc);
    }

    if let Some((family, params)) = s.split_once(':') {
        return parse_family(family.trim(), params.trim(), s);
    }

    let factors = split_top_level(s, 'x');
    if factors.len() > 1 {
        let mut acc = parse_group_spec(factors[0])?;
        for part in &factors[1..] {
            acc = acc.direct_product(&parse_group_spec(part)?)?;
        }
        return Ok(acc);
    }

    parse_name(s)
}

/// Split on a separator at parenthesis depth zero; empty pieces are dropped.
fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            c if c == sep && depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(s[start..].trim());
    parts.retain(|p| !p.is_empty());
    parts
}

/// `name(args)` (case-insensitive on the name) -> `args`.
fn strip_call_ci<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    let open = name.len();
    if s.len() > open + 1
        && s[..open].eq_ignore_ascii_case(name)
        && s[open..].starts_with('(')
        && s.ends_with(')')
    {
        Some(&s[open + 1..s.len() - 1])
    } else {
        None
    }
}

fn parse_usize(tok: &str, context: &str) -> Result<usize, GroupError> {
    tok.trim()
        .parse::<usize>()
        .map_err(|_| GroupError::Parse(format!("expected an integer in {:?}", context)))
}

/// Parse `k1=v1,k2=v2`, requiring exactly the given keys in order.
fn parse_kv(params: &str, keys: &[&str], context: &str) -> Result<Vec<usize>, GroupError> {
    let parts = split_top_level(params, ',');
    if parts.len() != keys.len() {
        return Err(GroupError::Parse(format!(
            "expected parameters {} in {:?}",
            keys.join(","),
            context
        )));
    }
    let mut out = Vec::with_capacity(keys.len());
    for (part, key) in parts.iter().zip(keys) {
        let (k, v) = part.split_once('=').ok_or_else(|| {
            GroupError::Parse(format!("expected {}=<integer> in {:?}", key, context))
        })?;
        if !k.trim().eq_ignore_ascii_case(key) {
            return Err(GroupError::Parse(format!(
                "expected parameter {:?}, found {:?} in {:?}",
                key,
                k.trim(),
                context
            )));
        }
        out.push(parse_usize(v, context)?);
    }
    Ok(out)
}

/// A parameter that is either `<mult>n=<order>` style (`2m=12`, `4n=16`) or
/// a direct `m=...`/`n=...`; returns the small parameter.
fn scaled_param(
    params: &str,
    scaled_key: &str,
    mult: usize,
    plain_key: &str,
    context: &str,
) -> Result<usize, GroupError> {
    if let Some((k, v)) = params.split_once('=') {
        let k = k.trim();
        let v = parse_usize(v, context)?;
        if k.eq_ignore_ascii_case(scaled_key) {
            if v % mult != 0 || v == 0 {
                return Err(GroupError::Parse(format!(
                    "order {} must be a positive multiple of {} in {:?}",
                    v, mult, context
                )));
            }
            return Ok(v / mult);
        }
        if k.eq_ignore_ascii_case(plain_key) {
            return Ok(v);
        }
        return Err(GroupError::Parse(format!(
            "expected {}=<order> or {}=<value> in {:?}",
            scaled_key, plain_key, context
        )));
    }
    Err(GroupError::Parse(format!(
        "expected {}=<order> or {}=<value> in {:?}",
        scaled_key, plain_key, context
    )))
}

fn parse_family(family: &str, params: &str, context: &str) -> Result<Group, GroupError> {
    match family.to_ascii_uppercase().as_str() {
        "D" => build::dihedral(scaled_param(params, "2m", 2, "m", context)?),
        "QD" => {
            // `2^n` or `n=<n>`.
            if let Some(rest) = params.strip_prefix("2^") {
                let n = parse_usize(rest, context)?;
                build::quasidihedral(n as u32)
            } else {
                let n = scaled_param(params, "2^n", usize::MAX, "n", context)?;
                build::quasidihedral(n as u32)
            }
        }
        "M" => {
            let kv = parse_kv(params, &["r", "s"], context)?;
            build::modular_m2rs(kv[0], kv[1])
        }
        "Q" => build::dicyclic(scaled_param(params, "4n", 4, "n", context)?),
        "U" => build::u6n(scaled_param(params, "6n", 6, "n", context)?),
        "SD" => build::semidihedral_8n(scaled_param(params, "8n", 8, "n", context)?),
        "V" => build::v8n(scaled_param(params, "8n", 8, "n", context)?),
        "F" => {
            let kv = parse_kv(params, &["p", "q"], context)?;
            build::frobenius(kv[0], kv[1])
        }
        "HV" => {
            let kv = parse_kv(params, &["n"], context)?;
            build::hanaki_v(kv[0] as u32)
        }
        "HP" => {
            let kv = parse_kv(params, &["n", "p"], context)?;
            build::hanaki_p(kv[0] as u32, kv[1] as u64)
        }
        "Z" => build::cyclic(parse_usize(params, context)?),
        other => Err(GroupError::Parse(format!("unknown family {:?} in {:?}", other, context))),
    }
}

fn parse_name(s: &str) -> Result<Group, GroupError> {
    let upper = s.to_ascii_uppercase();
    match upper.as_str() {
        "S4" => return build::symmetric4(),
        "A4" => return build::alternating4(),
        "A5" => return build::alternating5(),
        "SL23" => return build::sl23(),
        "M16" => return build::modular16(),
        "PAULI16" => return build::pauli16(),
        "SG16_3" => return build::sg16_3(),
        _ => {}
    }

    if let Some(args) = strip_call_ci(s, "F") {
        let parts = split_top_level(args, ',');
        if parts.len() == 2 {
            return build::frobenius(parse_usize(parts[0], s)?, parse_usize(parts[1], s)?);
        }
        return Err(GroupError::Parse(format!("expected F(p,q) in {:?}", s)));
    }
    if let Some(args) = strip_call_ci(s, "HV") {
        return build::hanaki_v(parse_usize(args, s)? as u32);
    }
    if let Some(args) = strip_call_ci(s, "HP") {
        let parts = split_top_level(args, ',');
        if parts.len() == 2 {
            return build::hanaki_p(parse_usize(parts[0], s)? as u32, parse_usize(parts[1], s)? as u64);
        }
        return Err(GroupError::Parse(format!("expected HP(n,p) in {:?}", s)));
    }
    if let Some(args) = strip_call_ci(s, "M") {
        let kv = parse_kv(args, &["r", "s"], s)?;
        return build::modular_m2rs(kv[0], kv[1]);
    }

    // Prefix + order forms, longest prefixes first.
    for (prefix, divisor) in [("QD", 0usize), ("SD", 8), ("D", 2), ("Q", 4), ("U", 6), ("V", 8), ("Z", 1)] {
        if let Some(rest) = upper.strip_prefix(prefix) {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                let order = parse_usize(rest, s)?;
                return match prefix {
                    "QD" => {
                        if order >= 8 && order.is_power_of_two() {
                            build::quasidihedral(order.trailing_zeros())
                        } else {
                            Err(GroupError::Parse(format!(
                                "quasidihedral order {} is not a power of two (at least 8)",
                                order
                            )))
                        }
                    }
                    "Z" => build::cyclic(order),
                    _ => {
                        if order == 0 || order % divisor != 0 {
                            Err(GroupError::Parse(format!(
                                "{} order {} must be a positive multiple of {}",
                                prefix, order, divisor
                            )))
                        } else {
                            match prefix {
                                "SD" => build::semidihedral_8n(order / 8),
                                "D" => build::dihedral(order / 2),
                                "Q" => build::dicyclic(order / 4),
                                "U" => build::u6n(order / 6),
                                "V" => build::v8n(order / 8),
                                _ => unreachable!(),
                            }
                        }
                    }
                };
            }
        }
    }

    Err(GroupError::Parse(format!("unrecognized group description {:?}", s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_of(spec: &str) -> usize {
        parse_group_spec(spec).unwrap().order()
    }

    #[test]
    fn family_parameter_forms() {
        assert_eq!(order_of("D:2m=12"), 12);
        assert_eq!(order_of("D:m=6"), 12);
        assert_eq!(order_of("QD:2^4"), 16);
        assert_eq!(order_of("QD:n=4"), 16);
        assert_eq!(order_of("M:r=5,s=2"), 20);
        assert_eq!(order_of("Q:4n=16"), 16);
        assert_eq!(order_of("U:6n=18"), 18);
        assert_eq!(order_of("SD:8n=24"), 24);
        assert_eq!(order_of("V:8n=16"), 16);
        assert_eq!(order_of("F:p=7,q=3"), 21);
        assert_eq!(order_of("HV:n=2"), 16);
        assert_eq!(order_of("HP:n=1,p=3"), 27);
        assert_eq!(order_of("Z:4"), 4);
    }

    #[test]
    fn canonical_name_round_trips() {
        for spec in [
            "D12", "QD16", "M(r=5,s=2)", "Q16", "U18", "SD24", "V16", "F(7,3)", "HV(2)",
            "HP(1,3)", "S4", "A4", "A5", "SL23", "M16", "Pauli16", "SG16_3", "Z4",
        ] {
            let g = parse_group_spec(spec).unwrap();
            assert_eq!(g.name(), spec, "canonical name mismatch for {:?}", spec);
            let again = parse_group_spec(g.name()).unwrap();
            assert_eq!(again.order(), g.order());
        }
    }

    #[test]
    fn products() {
        let g = parse_group_spec("prod(A4,Z2)").unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.name(), "A4xZ2");
        // Round trip through the infix form.
        let h = parse_group_spec("A4xZ2").unwrap();
        assert_eq!(h.order(), 24);
        let triple = parse_group_spec("prod(Z2,Z2,Z3)").unwrap();
        assert_eq!(triple.order(), 12);
        let nested = parse_group_spec("prod(F(5,4),Z3)").unwrap();
        assert_eq!(nested.order(), 60);
        assert_eq!(nested.name(), "F(5,4)xZ3");
    }

    #[test]
    fn rejects_malformed_descriptions() {
        assert!(parse_group_spec("").is_err());
        assert!(parse_group_spec("W:5").is_err());
        assert!(parse_group_spec("D:2m=13").is_err());
        assert!(parse_group_spec("Q:4n=18").is_err());
        assert!(parse_group_spec("QD:2^2").is_err());
        assert!(parse_group_spec("QD12").is_err());
        assert!(parse_group_spec("M:r=5").is_err());
        assert!(parse_group_spec("notagroup").is_err());
    }

    #[test]
    fn case_insensitive() {
        assert_eq!(order_of("d:2m=6"), 6);
        assert_eq!(order_of("sl23"), 24);
        assert_eq!(order_of("hv(2)"), 16);
        assert_eq!(order_of("pauli16"), 16);
    }
}
