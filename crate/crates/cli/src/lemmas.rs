use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use anyhow::Result;
use serde_json::{json, Value};
use twistlink_core::graph::{for_each_graph, BigonVariant, Constraints};
use twistlink_core::{search_counterexamples, Context, Lemma};

use crate::{ContextArg, LemmaArg};

pub fn lemma(which: LemmaArg, r_tw: Option<usize>) -> Result<Lemma> {
    Ok(match which {
        LemmaArg::Sphere => Lemma::Sphere,
        LemmaArg::Disk => Lemma::Disk,
        LemmaArg::Torus => Lemma::Torus,
        LemmaArg::BigonBound => {
            let Some(r_tw) = r_tw else {
                anyhow::bail!("--lemma bigon-bound needs --rtw")
            };
            if r_tw == 0 {
                anyhow::bail!("--rtw must be positive");
            }
            Lemma::BigonBound {
                r_tw,
                variant: BigonVariant::Disk,
            }
        }
    })
}

/// The campaign result without its wall-clock time, so equal runs print
/// equal bytes.
pub struct Campaign {
    pub result: Value,
    pub counts: Vec<usize>,
    pub counterexamples: usize,
    pub runtime_ms: u128,
}

pub fn verify(lemma: Lemma, max_edges: usize) -> Result<Campaign> {
    let r = search_counterexamples(lemma, max_edges)?;
    let result = json!({
        "lemma": r.lemma,
        "max_edges": r.max_edges,
        "instances_checked": r.instances_checked,
        "vacuous": r.vacuous,
        "counts_by_edges": r.counts_by_edges,
        "counterexamples": r.counterexamples,
    });
    Ok(Campaign {
        result,
        counts: r.counts_by_edges,
        counterexamples: r.counterexamples.len(),
        runtime_ms: r.runtime_ms,
    })
}

pub fn context(c: ContextArg) -> Context {
    match c {
        ContextArg::Sphere => Context::Sphere,
        ContextArg::Disk => Context::Disk,
        ContextArg::Torus => Context::Torus,
    }
}

pub fn enumerate(context: Context, max_edges: usize, min_face_degree: usize, count_only: bool) -> Result<Value> {
    let constraints = Constraints {
        min_face_degree,
        schedule: None,
    };
    let counts: Vec<AtomicUsize> = (0..=max_edges).map(|_| AtomicUsize::new(0)).collect();
    if count_only {
        for_each_graph(context, max_edges, &constraints, |g| {
            counts[g.edge_count()].fetch_add(1, Ordering::Relaxed);
        })?;
        let counts: Vec<usize> = counts.into_iter().map(|c| c.into_inner()).collect();
        return Ok(json!({
            "context": context,
            "max_edges": max_edges,
            "min_face_degree": min_face_degree,
            "total": counts.iter().sum::<usize>(),
            "counts_by_edges": counts,
        }));
    }
    let graphs = Mutex::new(Vec::new());
    for_each_graph(context, max_edges, &constraints, |g| {
        graphs.lock().unwrap().push(g.to_json())
    })?;
    let mut graphs = graphs.into_inner().unwrap();
    graphs.sort_by_cached_key(|g| (g["pairing"].as_array().map_or(0, Vec::len), g.to_string()));
    for g in &graphs {
        let e = g["pairing"].as_array().map_or(0, Vec::len);
        counts[e].fetch_add(1, Ordering::Relaxed);
    }
    let counts: Vec<usize> = counts.into_iter().map(|c| c.into_inner()).collect();
    Ok(json!({
        "context": context,
        "max_edges": max_edges,
        "min_face_degree": min_face_degree,
        "total": graphs.len(),
        "counts_by_edges": counts,
        "graphs": graphs,
    }))
}
