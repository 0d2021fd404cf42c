use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use super::gen::*;
use super::Checks;
use crate::glossa::{Description, ElementSet, Glossa};
use crate::nerve::{
    check_convexity_theorem, descriptive_nerve, is_digitally_convex,
    kwise_descriptive_intersection, lattice_of, Collection, LatticeSet,
};
use crate::oracle::{brute_force_digitally_convex, oracle_kwise, Naive};
use crate::setops::{
    check_injective, DescriptiveOps, DescriptiveResult, Spatial, UnionConfig, Variant,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Core,
    Intersection,
    RestrictiveDiscriminatory,
    NonrestrictiveDiscriminatory,
    Equivalence,
    Tolerance,
    Oracle,
    Nerve,
    Convexity,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Core,
        Suite::Intersection,
        Suite::RestrictiveDiscriminatory,
        Suite::NonrestrictiveDiscriminatory,
        Suite::Equivalence,
        Suite::Tolerance,
        Suite::Oracle,
        Suite::Nerve,
        Suite::Convexity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Core => "core",
            Suite::Intersection => "intersection",
            Suite::RestrictiveDiscriminatory => "restrictive-discriminatory",
            Suite::NonrestrictiveDiscriminatory => "nonrestrictive-discriminatory",
            Suite::Equivalence => "equivalence",
            Suite::Tolerance => "tolerance",
            Suite::Oracle => "oracle",
            Suite::Nerve => "nerve",
            Suite::Convexity => "convexity",
        }
    }

    /// `all` expands to every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>, String> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',')
            .map(|part| {
                Suite::ALL
                    .into_iter()
                    .find(|x| x.name() == part.trim())
                    .ok_or_else(|| format!("unknown suite `{part}`"))
            })
            .collect()
    }

    pub(crate) fn run_trial(self, rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps) -> Checks {
        let mut c = Checks::default();
        match self {
            Suite::Core => core(rng, &mut c),
            Suite::Intersection => intersection(rng, ops, &mut c),
            Suite::RestrictiveDiscriminatory => restrictive_discriminatory(rng, ops, &mut c),
            Suite::NonrestrictiveDiscriminatory => nonrestrictive_discriminatory(rng, ops, &mut c),
            Suite::Equivalence => equivalence(rng, ops, &mut c),
            Suite::Tolerance => tolerance(rng, ops, &mut c),
            Suite::Oracle => oracle(rng, ops, &mut c),
            Suite::Nerve => nerve(rng, ops, &mut c),
            Suite::Convexity => convexity(rng, &mut c),
        }
        c
    }
}

fn show(s: &ElementSet) -> String {
    format!("{:?}", s.ids)
}

/// `{x ∈ set : φ(x) within η of some target}`.
fn matching(g: &Glossa, set: &ElementSet, targets: &[Description], eta: f64) -> ElementSet {
    set.iter()
        .filter(|id| {
            let d = g.desc_of(id).expect("generated ids belong to the glossa");
            targets.iter().any(|t| d.matches(t, eta))
        })
        .collect()
}

fn same_fiber(x: &[Description], y: &[Description]) -> bool {
    x.len() == y.len() && x.iter().all(|d| y.contains(d))
}

fn core(rng: &mut ChaCha8Rng, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (u1, u2) = random_pair(rng, &g);
    let target = random_target(rng, g.dim());
    let eta = *[0.5, 1.0, 60.0].choose(rng).unwrap();
    c.instance(instance_json(
        &g,
        &u1,
        &u2,
        json!({ "target": target, "eta": eta }),
    ));

    c.check(
        "local-trivialization",
        g.local_trivialization_check(&u1),
        || show(&u1),
    );

    let surjective = g
        .elements()
        .iter()
        .enumerate()
        .all(|(i, e)| matches!(g.project(&e.id, g.desc(i)), Ok(p) if p == e.id));
    c.check("projection-onto-carrier", surjective, String::new);

    if let (Some(exact), Some(tol)) = (
        c.ok("pi-inverse-monotone", g.pi_inverse(&target, &u1, 0.0)),
        c.ok("pi-inverse-monotone", g.pi_inverse(&target, &u1, eta)),
    ) {
        c.check("pi-inverse-monotone", exact.is_subset(&tol), || {
            format!("{} ⊄ {}", show(&exact), show(&tol))
        });
    }

    let d2 = u1.intersection(&u2);
    if let (Some(full), Some(restricted)) = (
        c.ok("pi-inverse-restriction", g.pi_inverse(&target, &u1, eta)),
        c.ok("pi-inverse-restriction", g.pi_inverse(&target, &d2, eta)),
    ) {
        let lhs = full.intersection(&d2);
        c.check("pi-inverse-restriction", lhs == restricted, || {
            format!("{} vs {}", show(&lhs), show(&restricted))
        });
    }

    let joint = g.fiber(&u1.union(&u2), false).unwrap();
    let mut split = g.fiber(&u1, false).unwrap();
    for d in g.fiber(&u2, false).unwrap() {
        if !split.contains(&d) {
            split.push(d);
        }
    }
    c.check("fiber-of-union", same_fiber(&joint, &split), || {
        format!("{joint:?} vs {split:?}")
    });
}

fn intersection(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    let eta = random_eta(rng);
    c.instance(instance_json(&g, &a, &b, json!({ "eta": eta })));
    let ab = a.intersection(&b);
    let aub = a.union(&b);

    let Some(r) = c.ok("1-commutative", ops.intersection(&g, &a, &b, 0.0)) else {
        return;
    };
    if let (Some(x), Some(y)) = (
        c.ok("1-commutative", ops.intersection(&g, &a, &b, eta)),
        c.ok("1-commutative", ops.intersection(&g, &b, &a, eta)),
    ) {
        c.check("1-commutative", x == y, || {
            format!("A⋂B = {} but B⋂A = {}", show(&x), show(&y))
        });
    }

    if let Some(e) = c.ok(
        "2-empty-operand",
        ops.intersection(&g, &ElementSet::new(), &b, 0.0),
    ) {
        let want: ElementSet = b
            .iter()
            .filter(|id| g.desc_of(id).unwrap() == g.empty_desc())
            .collect();
        c.check("2-empty-operand", e == want, || {
            format!("got {}, want {}", show(&e), show(&want))
        });
    }

    if let Some(same) = c.ok("3-identical-operands", ops.intersection(&g, &a, &a, 0.0)) {
        c.check("3-identical-operands", same == a, || {
            format!("A⋂A = {}", show(&same))
        });
    }

    c.check_if(
        "4-spatial-implies-descriptive",
        !ab.is_empty(),
        || !r.is_empty(),
        || show(&r),
    );
    c.witness(
        "5-descriptive-without-spatial",
        !a.is_empty() && !b.is_empty() && ab.is_empty() && !r.is_empty(),
    );

    let both = !a.is_empty() && !b.is_empty();
    let injective = check_injective(&g, &aub).unwrap().injective;
    c.check_if(
        "6-injective-implies-equality",
        both && injective,
        || r == ab,
        || format!("injective on A∪B yet A⋂B = {} ≠ {}", show(&r), show(&ab)),
    );
    c.check_if(
        "6-inequality-implies-non-injective",
        both && r != ab,
        || !injective,
        || "φ injective on A∪B".into(),
    );
    c.witness("6-non-injective-counterexample", both && r != ab);

    // the same implication on a probe that is injective everywhere
    let gi = injective_glossa(rng, 64);
    let (ai, bi) = (nonempty_subset(rng, &gi), nonempty_subset(rng, &gi));
    if let Some(ri) = c.ok(
        "6-injective-implies-equality",
        ops.intersection(&gi, &ai, &bi, 0.0),
    ) {
        let want = ai.intersection(&bi);
        c.check("6-injective-implies-equality", ri == want, || {
            format!("injective glossa: {} ≠ {}", show(&ri), show(&want))
        });
    }

    if let Some(rt) = c.ok("7-within-union", ops.intersection(&g, &a, &b, eta)) {
        c.check(
            "7-within-union",
            r.is_subset(&aub) && rt.is_subset(&aub),
            || show(&rt),
        );
    }
}

fn targets_pair(rng: &mut ChaCha8Rng, dim: usize) -> (Description, Description) {
    (random_target(rng, dim), random_target(rng, dim))
}

fn restrictive_discriminatory(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    let eta = *[0.0, 0.0, 0.5, 1.0].choose(rng).unwrap();
    let (i, j) = targets_pair(rng, g.dim());
    let t = vec![i.clone(), j.clone()];
    c.instance(instance_json(
        &g,
        &a,
        &b,
        json!({ "targets": t, "eta": eta }),
    ));
    let cfg = UnionConfig::discriminatory(Spatial::Restrictive, t.clone(), eta);
    let ab = a.intersection(&b);

    let Some(r) = c.ok("1-commutative", ops.union(&g, &a, &b, &cfg)) else {
        return;
    };
    if let Some(s) = c.ok("1-commutative", ops.union(&g, &b, &a, &cfg)) {
        c.check("1-commutative", r == s, || format!("{r:?} vs {s:?}"));
    }

    if let Some(e) = c.ok(
        "2-empty-operand",
        ops.union(&g, &ElementSet::new(), &b, &cfg),
    ) {
        let flag = t.iter().any(|x| g.empty_desc().matches(x, eta));
        c.check(
            "2-empty-operand",
            e.elements.is_empty() && e.includes_empty_set == flag,
            || format!("{e:?}"),
        );
    }

    if let Some(same) = c.ok("3-identical-operands", ops.union(&g, &a, &a, &cfg)) {
        let want = matching(&g, &a, &t, eta);
        c.check("3-identical-operands", same.elements == want, || {
            show(&same.elements)
        });
    }

    let hits = matching(&g, &ab, &t, eta);
    c.check(
        "4-all-targeted-iff-intersection",
        (hits == ab) == (r.elements == ab),
        || {
            format!(
                "targeted {} of A∩B = {}, union {}",
                show(&hits),
                show(&ab),
                show(&r.elements)
            )
        },
    );
    c.check(
        "5-none-targeted-iff-empty",
        hits.is_empty() == r.elements.is_empty(),
        || show(&r.elements),
    );

    let i_absent = matching(&g, &ab, std::slice::from_ref(&i), eta).is_empty();
    let cfg_j = UnionConfig::discriminatory(Spatial::Restrictive, vec![j.clone()], eta);
    if let Some(rj) = c.ok(
        "6-unmatched-target-droppable",
        ops.union(&g, &a, &b, &cfg_j),
    ) {
        c.check_if(
            "6-unmatched-target-droppable",
            i_absent,
            || rj.elements == r.elements,
            || {
                format!(
                    "{{i,j}}: {}, {{j}}: {}",
                    show(&r.elements),
                    show(&rj.elements)
                )
            },
        );
    }

    c.check("within-intersection", r.elements.is_subset(&ab), || {
        show(&r.elements)
    });
}

fn nonrestrictive_discriminatory(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    let eta = *[0.0, 0.0, 0.5, 1.0].choose(rng).unwrap();
    let (i, j) = targets_pair(rng, g.dim());
    let t = vec![i.clone(), j.clone()];
    c.instance(instance_json(
        &g,
        &a,
        &b,
        json!({ "targets": t, "eta": eta }),
    ));
    let cfg = UnionConfig::discriminatory(Spatial::Nonrestrictive, t.clone(), eta);
    let aub = a.union(&b);

    let Some(r) = c.ok("1-commutative", ops.union(&g, &a, &b, &cfg)) else {
        return;
    };
    if let Some(s) = c.ok("1-commutative", ops.union(&g, &b, &a, &cfg)) {
        c.check("1-commutative", r == s, || format!("{r:?} vs {s:?}"));
    }

    if let Some(e) = c.ok(
        "2-empty-operand",
        ops.union(&g, &ElementSet::new(), &b, &cfg),
    ) {
        let want = matching(&g, &b, &t, eta);
        c.check(
            "2-empty-operand",
            e.elements == want && !e.includes_empty_set,
            || format!("{e:?}"),
        );
    }

    if let Some(same) = c.ok("3-identical-operands", ops.union(&g, &a, &a, &cfg)) {
        let want = matching(&g, &a, &t, eta);
        c.check("3-identical-operands", same.elements == want, || {
            show(&same.elements)
        });
    }

    let hits = matching(&g, &aub, &t, eta);
    c.check(
        "4-all-targeted-iff-union",
        (hits == aub) == (r.elements == aub),
        || {
            format!(
                "targeted {} of A∪B = {}, union {}",
                show(&hits),
                show(&aub),
                show(&r.elements)
            )
        },
    );
    c.check_if(
        "5-none-targeted-iff-empty",
        !a.is_empty() && !b.is_empty(),
        || hits.is_empty() == r.elements.is_empty(),
        || show(&r.elements),
    );

    let i_absent = matching(&g, &aub, std::slice::from_ref(&i), eta).is_empty();
    let cfg_j = UnionConfig::discriminatory(Spatial::Nonrestrictive, vec![j.clone()], eta);
    if let Some(rj) = c.ok(
        "6-unmatched-target-droppable",
        ops.union(&g, &a, &b, &cfg_j),
    ) {
        c.check_if(
            "6-unmatched-target-droppable",
            i_absent,
            || rj.elements == r.elements,
            || {
                format!(
                    "{{i,j}}: {}, {{j}}: {}",
                    show(&r.elements),
                    show(&rj.elements)
                )
            },
        );
    }

    // injective probe, targets exactly the descriptions of A ∩ B
    let gi = injective_glossa(rng, 64);
    let mut ai = nonempty_subset(rng, &gi);
    let mut bi = nonempty_subset(rng, &gi);
    let shared = gi.element(rng.gen_range(0..gi.len())).id.clone();
    ai.insert(shared.clone());
    bi.insert(shared);
    let meet = ai.intersection(&bi);
    let ti = gi.fiber(&meet, false).unwrap();
    let cfg_i = UnionConfig::discriminatory(Spatial::Nonrestrictive, ti, 0.0);
    if let Some(ri) = c.ok(
        "7-injective-targets-give-intersection",
        ops.union(&gi, &ai, &bi, &cfg_i),
    ) {
        c.check(
            "7-injective-targets-give-intersection",
            ri.elements == meet,
            || format!("{} ≠ {}", show(&ri.elements), show(&meet)),
        );
    }

    c.check("within-union", r.elements.is_subset(&aub), || {
        show(&r.elements)
    });
}

fn equivalence(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    c.instance(instance_json(&g, &a, &b, json!({})));
    let ab = a.intersection(&b);
    let aub = a.union(&b);

    let exact_r = UnionConfig::nondiscriminatory(Spatial::Restrictive, 0.0);
    let exact_n = UnionConfig::nondiscriminatory(Spatial::Nonrestrictive, 0.0);
    if let Some(r) = c.ok(
        "exact-restrictive-is-intersection",
        ops.union(&g, &a, &b, &exact_r),
    ) {
        c.check(
            "exact-restrictive-is-intersection",
            r.elements == ab,
            || show(&r.elements),
        );
    }
    if let Some(r) = c.ok(
        "exact-nonrestrictive-is-union",
        ops.union(&g, &a, &b, &exact_n),
    ) {
        c.check("exact-nonrestrictive-is-union", r.elements == aub, || {
            show(&r.elements)
        });
    }
    for eta in [0.5, 1.0, 60.0] {
        if let Some(r) = c.ok(
            "tolerance-restrictive-is-intersection",
            ops.union(&g, &a, &b, &exact_r.with_eta(eta)),
        ) {
            c.check(
                "tolerance-restrictive-is-intersection",
                r.elements == ab,
                || format!("η = {eta}: {}", show(&r.elements)),
            );
        }
        if let Some(r) = c.ok(
            "tolerance-nonrestrictive-is-union",
            ops.union(&g, &a, &b, &exact_n.with_eta(eta)),
        ) {
            c.check(
                "tolerance-nonrestrictive-is-union",
                r.elements == aub,
                || format!("η = {eta}: {}", show(&r.elements)),
            );
        }
    }
}

fn monotone_name(v: Variant) -> &'static str {
    match v {
        Variant::RestrictiveDiscriminatory => "eta-monotone-restrictive-discriminatory",
        Variant::NonrestrictiveDiscriminatory => "eta-monotone-nonrestrictive-discriminatory",
        Variant::RestrictiveNondiscriminatory => "eta-monotone-restrictive-nondiscriminatory",
        Variant::NonrestrictiveNondiscriminatory => "eta-monotone-nonrestrictive-nondiscriminatory",
    }
}

fn oracle_name(v: Variant) -> &'static str {
    match v {
        Variant::RestrictiveDiscriminatory => "restrictive-discriminatory-matches-oracle",
        Variant::NonrestrictiveDiscriminatory => "nonrestrictive-discriminatory-matches-oracle",
        Variant::RestrictiveNondiscriminatory => "restrictive-nondiscriminatory-matches-oracle",
        Variant::NonrestrictiveNondiscriminatory => {
            "nonrestrictive-nondiscriminatory-matches-oracle"
        }
    }
}

/// Exact set-builder evaluation with `φ(x) ∈ φ(S)` membership on fibers.
fn exact_definition(
    g: &Glossa,
    a: &ElementSet,
    b: &ElementSet,
    v: Option<Variant>,
    t: &[Description],
) -> DescriptiveResult {
    let fa = g.fiber(a, a.is_empty()).unwrap();
    let fb = g.fiber(b, b.is_empty()).unwrap();
    let ambient = match v {
        None => a.union(b),
        Some(v) if v.spatial() == Spatial::Restrictive => a.intersection(b),
        Some(_) => a.union(b),
    };
    let elements = ambient
        .iter()
        .filter(|id| {
            let d = g.desc_of(id).unwrap();
            match v {
                None => fa.contains(d) && fb.contains(d),
                Some(v) if v.is_discriminatory() => t.contains(d),
                Some(_) => fa.contains(d) || fb.contains(d),
            }
        })
        .collect();
    let includes_empty_set = v == Some(Variant::RestrictiveDiscriminatory)
        && (a.is_empty() || b.is_empty())
        && t.contains(g.empty_desc());
    DescriptiveResult {
        elements,
        includes_empty_set,
    }
}

fn tolerance(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    let t = vec![random_target(rng, g.dim()), random_target(rng, g.dim())];
    let mut etas = [random_eta(rng), random_eta(rng)];
    etas.sort_by(f64::total_cmp);
    let [lo, hi] = etas;
    c.instance(instance_json(
        &g,
        &a,
        &b,
        json!({ "targets": t, "eta_lo": lo, "eta_hi": hi }),
    ));

    if let (Some(x), Some(y)) = (
        c.ok(
            "eta-monotone-intersection",
            ops.intersection(&g, &a, &b, lo),
        ),
        c.ok(
            "eta-monotone-intersection",
            ops.intersection(&g, &a, &b, hi),
        ),
    ) {
        c.check("eta-monotone-intersection", x.is_subset(&y), || {
            format!("{} ⊄ {}", show(&x), show(&y))
        });
    }
    for v in Variant::ALL {
        let name = monotone_name(v);
        if let (Some(x), Some(y)) = (
            c.ok(name, ops.union(&g, &a, &b, &v.config(&t, lo))),
            c.ok(name, ops.union(&g, &a, &b, &v.config(&t, hi))),
        ) {
            c.check(name, x.elements.is_subset(&y.elements), || {
                format!("{} ⊄ {}", show(&x.elements), show(&y.elements))
            });
        }
    }

    if let Some(x) = c.ok("eta-zero-is-exact", ops.intersection(&g, &a, &b, 0.0)) {
        let want = exact_definition(&g, &a, &b, None, &t).elements;
        c.check("eta-zero-is-exact", x == want, || {
            format!("intersection {} vs {}", show(&x), show(&want))
        });
    }
    for v in Variant::ALL {
        if let Some(x) = c.ok(
            "eta-zero-is-exact",
            ops.union(&g, &a, &b, &v.config(&t, 0.0)),
        ) {
            let want = exact_definition(&g, &a, &b, Some(v), &t);
            c.check("eta-zero-is-exact", x == want, || {
                format!("{v}: {x:?} vs {want:?}")
            });
        }
    }
}

fn oracle(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 64);
    let (a, b) = random_pair(rng, &g);
    let eta = random_eta(rng);
    let n_targets = rng.gen_range(1..=3);
    let t: Vec<Description> = (0..n_targets)
        .map(|_| random_target(rng, g.dim()))
        .collect();
    c.instance(instance_json(
        &g,
        &a,
        &b,
        json!({ "targets": t, "eta": eta }),
    ));

    if let (Some(x), Some(y)) = (
        c.ok(
            "intersection-matches-oracle",
            ops.intersection(&g, &a, &b, eta),
        ),
        c.ok(
            "intersection-matches-oracle",
            Naive.intersection(&g, &a, &b, eta),
        ),
    ) {
        c.check("intersection-matches-oracle", x == y, || {
            format!("{} vs oracle {}", show(&x), show(&y))
        });
    }
    for v in Variant::ALL {
        let name = oracle_name(v);
        let cfg = v.config(&t, eta);
        if let (Some(x), Some(y)) = (
            c.ok(name, ops.union(&g, &a, &b, &cfg)),
            c.ok(name, Naive.union(&g, &a, &b, &cfg)),
        ) {
            c.check(name, x == y, || format!("{x:?} vs oracle {y:?}"));
        }
    }

    let k = rng.gen_range(1..=4);
    let members: Vec<ElementSet> = (0..k).map(|_| random_subset(rng, &g)).collect();
    if let (Some(x), Some(y)) = (
        c.ok(
            "kwise-matches-oracle",
            kwise_descriptive_intersection(&g, &members, eta),
        ),
        c.ok("kwise-matches-oracle", oracle_kwise(&g, &members, eta)),
    ) {
        c.check("kwise-matches-oracle", x == y, || {
            format!("{} vs oracle {}", show(&x), show(&y))
        });
    }

    if let Some(x) = c.ok("pi-inverse-matches-scan", g.pi_inverse(&t[0], &a, eta)) {
        let want = matching(&g, &a, &t[..1], eta);
        c.check("pi-inverse-matches-scan", x == want, || {
            format!("{} vs {}", show(&x), show(&want))
        });
    }
}

fn nerve(rng: &mut ChaCha8Rng, ops: &dyn DescriptiveOps, c: &mut Checks) {
    let g = random_glossa(rng, 32);
    let n = rng.gen_range(1..=8);
    let coll = Collection::new((0..n).map(|_| nonempty_subset(rng, &g)).collect());
    c.instance(json!({ "glossa": g, "collection": coll }));

    let Some(k) = c.ok("downward-closed", descriptive_nerve(&g, &coll, 0.0)) else {
        return;
    };
    c.check("downward-closed", true, String::new);

    let mut brute = Vec::new();
    for mask in 1u32..(1 << n) {
        let chosen: Vec<ElementSet> = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| coll.members[i].clone())
            .collect();
        if !oracle_kwise(&g, &chosen, 0.0).unwrap().is_empty() {
            brute.push(
                (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect::<Vec<_>>(),
            );
        }
    }
    brute.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    c.check("matches-brute-force", k.faces() == brute.as_slice(), || {
        format!("nerve {:?} vs brute force {:?}", k.faces(), brute)
    });

    for i in 0..n {
        for j in i + 1..n {
            let (ui, uj) = (&coll.members[i], &coll.members[j]);
            if let Some(r) = c.ok("binary-faces-agree", ops.intersection(&g, ui, uj, 0.0)) {
                c.check(
                    "binary-faces-agree",
                    k.contains(&[i + 1, j + 1]) == !r.is_empty(),
                    || format!("pair ({}, {})", i + 1, j + 1),
                );
            }
        }
    }

    let eta = random_eta(rng);
    if n >= 2 {
        let (u1, u2) = (&coll.members[0], &coll.members[1]);
        if let (Some(x), Some(y)) = (
            c.ok(
                "kwise-binary-agree",
                kwise_descriptive_intersection(&g, &[u1.clone(), u2.clone()], eta),
            ),
            c.ok("kwise-binary-agree", ops.intersection(&g, u1, u2, eta)),
        ) {
            c.check("kwise-binary-agree", x == y, || {
                format!("{} vs {}", show(&x), show(&y))
            });
        }
    }
}

fn convexity(rng: &mut ChaCha8Rng, c: &mut Checks) {
    let g = grid_glossa(rng);
    let la = random_convex(rng, None);
    let anchor = *la.points.iter().collect::<Vec<_>>().choose(rng).unwrap();
    let lb = random_convex(rng, Some(*anchor));
    let (a, b) = (lattice_ids(&la), lattice_ids(&lb));
    let t = vec![random_target(rng, g.dim()), random_target(rng, g.dim())];
    let eta = *[0.0, 0.0, 0.5, 1.0].choose(rng).unwrap();
    c.instance(instance_json(
        &g,
        &a,
        &b,
        json!({ "targets": t, "eta": eta }),
    ));

    let Some(rep) = c.ok(
        "part3-restricted-union-convex",
        check_convexity_theorem(&g, &a, &b, &t, eta),
    ) else {
        return;
    };
    let eq = |e: &crate::nerve::Equivalence| e.sets_equal && e.holds;
    c.check(
        "part1-targets-over-intersection",
        eq(&rep.restricted_targets),
        || format!("{:?}", rep.restricted_targets),
    );
    c.check(
        "part2-targets-over-union",
        eq(&rep.unrestricted_targets),
        || format!("{:?}", rep.unrestricted_targets),
    );
    c.check(
        "part3-restricted-union-convex",
        rep.restricted_union_convex,
        String::new,
    );
    c.check("part4-plain-union", eq(&rep.plain_union), || {
        format!("{:?}", rep.plain_union)
    });

    let ab = a.intersection(&b);
    let lab = lattice_of(&g, &ab).unwrap();
    c.check(
        "intersection-stays-convex",
        is_digitally_convex(&lab),
        || show(&ab),
    );

    let aub = a.union(&b);
    let scattered: ElementSet = aub.iter().filter(|_| rng.gen_bool(0.5)).collect();
    let mut samples: Vec<LatticeSet> = vec![la, lb, lab];
    for s in [&aub, &scattered] {
        samples.push(lattice_of(&g, s).unwrap());
    }
    for v in Variant::ALL {
        let u = crate::setops::descriptive_union(&g, &a, &b, &v.config(&t, eta)).unwrap();
        samples.push(lattice_of(&g, &u.elements).unwrap());
    }
    for s in &samples {
        let fast = is_digitally_convex(s);
        let slow = brute_force_digitally_convex(s);
        c.check("convexity-matches-oracle", fast == slow, || {
            format!("{:?}: fast {fast}, oracle {slow}", s.points)
        });
    }
}
