//! Text and JSON rendering. JSON objects use sorted keys and decimal-string
//! big integers so the output is canonical.

use jacobsthal::series::FormMatch;
use jacobsthal::{BigInt, GfMatchReport, IdentityReport, Quantity, SequenceParams, SweepEntry};
use serde_json::{json, Map, Value};

pub fn big(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn bigs(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(big).collect())
}

pub fn quantity(q: &Quantity) -> Value {
    match q {
        Quantity::Scalar(v) => big(v),
        Quantity::Vector(a, b) => json!([big(a), big(b)]),
        Quantity::Matrix(m) => json!([[big(&m.a), big(&m.b)], [big(&m.c), big(&m.d)]]),
        Quantity::Fraction {
            numerator,
            denominator,
        } => json!({ "numerator": big(numerator), "denominator": big(denominator) }),
    }
}

pub fn failure(report: &IdentityReport) -> Value {
    let instance = report.instance();
    let indices: Map<String, Value> = instance
        .indices()
        .iter()
        .map(|(name, v)| (name.to_string(), json!(v)))
        .collect();
    json!({
        "k": instance.k(),
        "indices": indices,
        "lhs": quantity(report.lhs()),
        "rhs": quantity(report.rhs()),
        "within_stated_domain": report.within_stated_domain(),
    })
}

pub fn sweep_entry(entry: &SweepEntry) -> Value {
    json!({
        "identity": entry.id.slug(),
        "form": entry.form.name(),
        "k_range": [entry.k_range.start(), entry.k_range.end()],
        "index_bound": entry.index_bound,
        "stated_domain": entry.id.stated_domain(),
        "checks": entry.checks,
        "failure_count": entry.failure_count,
        "failures": entry.failures.iter().map(failure).collect::<Vec<_>>(),
    })
}

pub fn sweep_table(entries: &[SweepEntry]) -> String {
    let mut out = format!(
        "{:<18} {:<10} {:<8} {:>5} {:>8} {:>8}\n",
        "identity", "form", "k", "n<=", "checks", "failures"
    );
    for e in entries {
        let k = format!("{}..{}", e.k_range.start(), e.k_range.end());
        out += &format!(
            "{:<18} {:<10} {:<8} {:>5} {:>8} {:>8}\n",
            e.id.slug(),
            e.form.name(),
            k,
            e.index_bound,
            e.checks,
            e.failure_count
        );
        for f in &e.failures {
            let instance = f.instance();
            let at = if instance.indices().is_empty() {
                format!("k={}", instance.k())
            } else {
                format!("k={}, {}", instance.k(), instance.indices())
            };
            out += &format!(
                "    counterexample {at}: lhs {} != rhs {}\n",
                f.lhs(),
                f.rhs()
            );
        }
    }
    out
}

fn form_json(params: &SequenceParams, count: usize, expected: &[BigInt], m: &FormMatch) -> Value {
    json!({
        "kind": params.kind().symbol(),
        "k": params.k(),
        "count": count,
        "form": m.form.name(),
        "numerator": bigs(m.gf.numerator().coeffs()),
        "denominator": bigs(m.gf.denominator().coeffs()),
        "coefficients": bigs(&m.coefficients),
        "expected": bigs(expected),
        "match": m.matches(),
        "first_mismatch": m.first_mismatch.as_ref().map(|x| json!({
            "index": x.index,
            "got": big(&x.got),
            "want": big(&x.want),
        })),
    })
}

pub fn series_json(report: &GfMatchReport, m: &FormMatch) -> Value {
    form_json(&report.params, report.count, &report.expected, m)
}

pub fn series_text(m: &FormMatch) -> String {
    let coefficients: Vec<String> = m.coefficients.iter().map(ToString::to_string).collect();
    let status = match &m.first_mismatch {
        None => "match".to_string(),
        Some(x) => format!("mismatch at n={} (got {}, want {})", x.index, x.got, x.want),
    };
    format!(
        "form: {}\ngf: {}\ncoefficients: {}\nstatus: {status}\n",
        m.form.name(),
        m.gf,
        coefficients.join(",")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use jacobsthal::Mat2;

    #[test]
    fn quantities_serialize_as_strings() {
        assert_eq!(quantity(&Quantity::Scalar((-4).into())), json!("-4"));
        assert_eq!(
            quantity(&Quantity::Vector(1.into(), 2.into())),
            json!(["1", "2"])
        );
        assert_eq!(
            quantity(&Quantity::Matrix(Mat2::new(1, 2, 3, 4))),
            json!([["1", "2"], ["3", "4"]])
        );
    }

    #[test]
    fn keys_are_sorted() {
        let v = json!({"b": 1, "a": 2});
        assert_eq!(v.to_string(), r#"{"a":2,"b":1}"#);
    }
}
