use crate::ideal::Ideal;
use crate::order::TermOrder;

/// Header metadata for the canonical ideal dump format.
#[derive(Debug, Clone, Default)]
pub struct DumpHeader {
    pub label: String,
    pub p: Option<String>,
    pub kappa: Vec<(String, String)>,
}

/// Canonical ideal dump: a header line recording roster, order and the
/// parameter assignments, then one generator per line with terms sorted by
/// the active order, coefficients as `num/den`, monomials as `var^e`
/// products joined by `*`.
pub fn dump_ideal(ideal: &Ideal, order: &TermOrder, header: &DumpHeader) -> String {
    let roster = ideal.roster();
    let mut out = String::new();
    out.push_str(&format!(
        "# ideal {} | roster=[{}] | order={}",
        header.label,
        roster,
        order.describe(roster)
    ));
    if let Some(p) = &header.p {
        out.push_str(&format!(" | p={p}"));
    }
    if !header.kappa.is_empty() {
        let ks: Vec<String> = header
            .kappa
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        out.push_str(&format!(" | kappa: {}", ks.join(", ")));
    }
    out.push('\n');
    let basis = ideal.groebner(order);
    if basis.is_empty() {
        out.push_str("0\n");
        return out;
    }
    for g in basis.iter() {
        out.push_str(&g.primitive_part(order).render(order));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::ring::Roster;

    #[test]
    fn dump_is_deterministic() {
        let r = Roster::parse("x,y");
        let i = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "2 y - 2 x").unwrap(),
                parse_poly(&r, "x^2").unwrap(),
            ],
        )
        .unwrap();
        let order = TermOrder::lex(&r);
        let hdr = DumpHeader {
            label: "demo".into(),
            p: Some("23".into()),
            kappa: vec![("k".into(), "8".into())],
        };
        let d1 = dump_ideal(&i, &order, &hdr);
        let d2 = dump_ideal(&i, &order, &hdr);
        assert_eq!(d1, d2);
        assert!(d1.starts_with("# ideal demo | roster=[x,y] | order=lex(x>y) | p=23 | kappa: k=8\n"));
        assert!(d1.contains("x - y\n"));
        assert!(d1.contains("y^2\n"));
    }
}
