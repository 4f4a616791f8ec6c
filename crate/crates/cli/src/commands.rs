use rayon::prelude::*;
use serde_json::{json, Value};

use ferrers_core::complex::{predicted_height, stanley_reisner};
use ferrers_core::hilbert::{
    bdl_instance, default_degree_bound, fiber_generators, four_way, Variant,
};
use ferrers_core::ideals::{minors_s, minors_t, BinomialIdealPresentation, MonomialIdeal};
use ferrers_core::polyring::{format_polynomial, is_groebner, parse_polynomial, TermOrder};
use ferrers_core::reductions::{
    diagonals_with_extra, predicted_reduction_number, reduction_number_with_budget,
    reg_equals_r_with_budget, ReductionOutcome,
};
use ferrers_core::shapes::SkewShape;
use ferrers_core::Error;

use crate::output::{ShapeResult, Status};
use crate::{CommandKind, RunArgs};

type Outcome = ferrers_core::Result<(Status, String, Value)>;

const ORDER: TermOrder = TermOrder::LexRowwise;

pub fn run_all(
    kind: CommandKind,
    args: &RunArgs,
    shapes: &[SkewShape],
) -> Result<Vec<ShapeResult>, String> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j as usize);
    }
    let pool = pool.build().map_err(|e| e.to_string())?;
    Ok(pool.install(|| shapes.par_iter().map(|s| run_one(kind, args, s)).collect()))
}

fn run_one(kind: CommandKind, args: &RunArgs, shape: &SkewShape) -> ShapeResult {
    let outcome = if shape.num_cells() as u64 > args.cell_cap {
        Ok((
            Status::Skipped,
            format!(
                "{} cells exceed the cap of {}",
                shape.num_cells(),
                args.cell_cap
            ),
            Value::Null,
        ))
    } else {
        match kind {
            CommandKind::GbVerify => gb_verify(shape),
            CommandKind::Hilbert => hilbert(shape, args),
            CommandKind::Reduction => reduction(shape, args),
            CommandKind::VdCheck => vd_check(shape, args),
            CommandKind::Sweep => sweep(shape, args),
        }
    };
    let (status, summary, details) = match outcome {
        Ok(o) => o,
        Err(Error::BudgetExceeded(m)) => (
            Status::Skipped,
            format!("budget exceeded: {m}"),
            Value::Null,
        ),
        Err(e) => (Status::Error, e.to_string(), Value::Null),
    };
    ShapeResult {
        shape: shape.clone(),
        status,
        summary,
        details,
    }
}

fn status_of(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Failed
    }
}

fn gb_side(p: &BinomialIdealPresentation) -> (bool, Value) {
    let check = is_groebner(&p.polys(), ORDER);
    let init = p.initial_ideal(ORDER);
    let certificate = check
        .certificate
        .as_ref()
        .map(|(i, j, r)| json!({"pair": [i, j], "remainder": format_polynomial(r, p.vars())}));
    let ok = check.is_groebner && init.is_squarefree();
    let value = json!({
        "minors": p.len(),
        "is_groebner": check.is_groebner,
        "pairs_checked": check.pairs_checked,
        "certificate": certificate,
        "initial_ideal": init.display_gens(),
        "squarefree": init.is_squarefree(),
    });
    (ok, value)
}

fn gb_verify(shape: &SkewShape) -> Outcome {
    let (ok_t, t) = gb_side(&minors_t(shape));
    let (ok_s, s, s_note) = if shape.is_symmetric_capable() {
        let (ok, v) = gb_side(&minors_s(shape)?);
        let note = format!("S {}", if ok { "ok" } else { "FAILED" });
        (ok, v, note)
    } else {
        (true, Value::Null, "S n/a".to_string())
    };
    let summary = format!("T {}, {s_note}", if ok_t { "ok" } else { "FAILED" });
    Ok((status_of(ok_t && ok_s), summary, json!({"t": t, "s": s})))
}

fn vd_side(
    init: &MonomialIdeal,
    predicted: usize,
    cap: u64,
) -> ferrers_core::Result<(Status, Value)> {
    if init.nvars() as u64 > cap {
        let reason = format!("{} vertices exceed the cap of {cap}", init.nvars());
        return Ok((Status::Skipped, json!({ "skipped": reason })));
    }
    let delta = stanley_reisner(init)?;
    let vd = delta.vertex_decomposition();
    let height = init.nvars() - (delta.dim() + 1) as usize;
    let witness: Vec<String> = vd.witness.iter().map(|v| v.to_string()).collect();
    let value = json!({
        "vertices": init.nvars(),
        "dim": delta.dim(),
        "facets": delta.facets().len(),
        "pure": delta.is_pure(),
        "decomposable": vd.decomposable,
        "witness": witness,
        "height": height,
        "predicted_height": predicted,
    });
    Ok((status_of(vd.decomposable && height == predicted), value))
}

fn vd_check(shape: &SkewShape, args: &RunArgs) -> Outcome {
    let init_t = minors_t(shape).initial_ideal(ORDER);
    let (st, t) = vd_side(&init_t, predicted_height(shape, false), args.vd_vertex_cap)?;
    let (ss, s) = if shape.is_symmetric_capable() {
        let init_s = minors_s(shape)?.initial_ideal(ORDER);
        vd_side(&init_s, predicted_height(shape, true), args.vd_vertex_cap)?
    } else {
        (Status::Ok, Value::Null)
    };
    let describe = |st: Status, v: &Value| match st {
        Status::Skipped => "skipped".to_string(),
        _ if v.is_null() => "n/a".to_string(),
        _ => format!(
            "{} height {}/{}",
            if v["decomposable"] == json!(true) {
                "VD"
            } else {
                "not VD"
            },
            v["height"],
            v["predicted_height"]
        ),
    };
    let summary = format!("T {}, S {}", describe(st, &t), describe(ss, &s));
    Ok((st.max(ss), summary, json!({"t": t, "s": s})))
}

fn hilbert(shape: &SkewShape, args: &RunArgs) -> Outcome {
    let variant: Variant = args.variant.into();
    let bound = args.degree_bound.map(|b| b as usize);
    let report = four_way(shape, variant, bound)?;
    let bdl = match variant {
        Variant::Specialized => {
            let upto = bound.unwrap_or_else(|| default_degree_bound(shape));
            Some(bdl_instance(shape)?.verify(upto))
        }
        Variant::Ferrers => None,
    };
    let ok = report.all_agree() && bdl != Some(false);
    let mut summary = format!(
        "p = {:?}, dim {}, multiplicity {}, regularity {}",
        report.initial_ideal.coeffs,
        report.dim,
        report.initial_ideal.multiplicity(),
        report.initial_ideal.regularity()
    );
    if !report.ground_truth_agrees {
        summary.push_str("; initial ideal, recursion and oracle disagree");
    }
    if !report.closed_form_agrees {
        summary.push_str(&format!(
            "; closed form differs in degrees {:?}",
            report.closed_form_mismatches
        ));
    }
    if bdl == Some(false) {
        summary.push_str("; basic double link identity fails");
    }
    let mut details = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
    details["basic_double_link"] = json!(bdl);
    Ok((status_of(ok), summary, details))
}

fn reduction(shape: &SkewShape, args: &RunArgs) -> Outcome {
    let variant: Variant = args.variant.into();
    let r_max = args.r_max.unwrap_or(shape.n() + 2);
    let budget = args.power_budget as usize;
    if args.extra_gens.is_empty() {
        let rc = reg_equals_r_with_budget(shape, variant, r_max, budget)?;
        let summary = format!(
            "r = {}, predicted {}, regularity {}, deg p {}",
            describe_r(rc.report.r_found),
            rc.predicted,
            rc.regularity_formula,
            rc.numerator_degree
        );
        let details = serde_json::to_value(&rc).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok((status_of(rc.agrees), summary, details));
    }
    let vars = fiber_generators(shape, variant)?.vars().clone();
    let extra = args
        .extra_gens
        .iter()
        .map(|g| parse_polynomial(g, &vars, ORDER))
        .collect::<ferrers_core::Result<Vec<_>>>()?;
    let candidate = diagonals_with_extra(shape, variant, extra)?;
    let mut report = reduction_number_with_budget(&candidate, r_max, budget)?;
    report.r_predicted = predicted_reduction_number(shape, variant).ok();
    let ok = report.r_found.value().is_some() && report.persistence_checked && report.minimal;
    let summary = format!(
        "r = {} with {} generators (minimal size {})",
        describe_r(report.r_found),
        report.generators.len(),
        report.expected_generators
    );
    let details = serde_json::to_value(&report).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((status_of(ok), summary, details))
}

fn describe_r(r: ReductionOutcome) -> String {
    match r {
        ReductionOutcome::Reduction(r) => r.to_string(),
        ReductionOutcome::NotAReduction { r_max } => format!("none up to {r_max}"),
    }
}

fn sweep(shape: &SkewShape, args: &RunArgs) -> Outcome {
    let mut parts = vec![
        ("gb-verify", gb_verify(shape)?),
        ("vd-check", vd_check(shape, args)?),
    ];
    if shape.is_symmetric_capable() || Variant::from(args.variant) == Variant::Ferrers {
        parts.push(("hilbert", hilbert(shape, args)?));
    }
    let status = parts.iter().map(|p| p.1 .0).max().unwrap_or(Status::Ok);
    let summary = parts
        .iter()
        .map(|(name, (st, _, _))| format!("{name} {}", st.as_str()))
        .collect::<Vec<_>>()
        .join(", ");
    let details: serde_json::Map<String, Value> = parts
        .into_iter()
        .map(|(name, (st, summary, d))| {
            (
                name.to_string(),
                json!({"status": st, "summary": summary, "details": d}),
            )
        })
        .collect();
    Ok((status, summary, Value::Object(details)))
}
