//! Acceptance gate: twelve end-to-end checks covering the full verification
//! surface — decomposition counts, dimension endpoints, linear families,
//! replacement tables, graph typing, triangle-freeness, cross-engine
//! intersection agreement, twist contracts, the link-cut identification,
//! self-map enumeration evidence, the four-piece counterexample, and star
//! configurations. Each test prints exactly one PASS/FAIL line.

use std::time::{Duration, Instant};

use ccw_core::complex::{build_x, link_cut_iso};
use ccw_core::curves::{classify_type, cut_along, Curve, TopType};
use ccw_core::intersection::{
    chord_calculus, dehn_twist, intersect, intersection_oracle, intersection_reduction,
};
use ccw_core::pants::{
    check_cccc, check_delta_table, check_lingraph, check_notriangle, check_valency1,
    dimension_range, fan_top_pants, is_top_dimensional, minimal_pants, standard_top_pants,
};
use ccw_core::position::is_isotopic;
use ccw_core::rigidity::{
    build_counterexample, build_star_configuration, check_locally_injective, check_simplicial,
    check_type_preservation, enumerate_li_self_maps, is_induced_by_symmetry, model_symmetries,
    non_induced_certificate, verify_star_configuration,
};
use ccw_core::surface_model::{build_model, ModelPolygon, SurfaceSpec};
use ccw_core::Error;

/// Run one acceptance criterion and print exactly one PASS/FAIL line for it.
/// On success the body may return extra detail that is appended to the line.
fn criterion(name: &str, body: impl FnOnce() -> Result<String, String>) {
    match body() {
        Ok(detail) => {
            if detail.is_empty() {
                println!("PASS {name}");
            } else {
                println!("PASS {name} — {detail}");
            }
        }
        Err(msg) => {
            println!("FAIL {name} — {msg}");
            panic!("{name}: {msg}");
        }
    }
}

fn lib<T>(r: ccw_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn within(t0: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = t0.elapsed();
    if took > limit {
        return Err(format!("{what} took {took:.2?}, over the {limit:.2?} budget"));
    }
    Ok(())
}

fn is_two_sided(model: &ModelPolygon, c: &Curve) -> Result<bool, String> {
    Ok(!lib(c.realize(model))?.is_one_sided(model))
}

#[test]
fn a01_top_decompositions_count_2g_plus_n_minus_3_with_g_one_sided() {
    criterion(
        "criterion 1: top decompositions have 2g+n-3 curves, g of them one-sided",
        || {
            let mut decomps_checked = 0usize;
            for (g, n) in [(1u32, 4u32), (2, 3), (3, 2), (3, 4), (5, 0)] {
                let t0 = Instant::now();
                let spec = SurfaceSpec::new(g, n);
                let model = lib(build_model(spec))?;
                let expected = (2 * g + n - 3) as usize;
                let mut decomps = vec![lib(standard_top_pants(&model))?];
                for anchor in 1..=(g + n) {
                    decomps.push(lib(fan_top_pants(&model, anchor))?);
                }
                for p in &decomps {
                    if !lib(is_top_dimensional(&model, p))? {
                        return Err(format!("a fan on N_{{{g},{n}}} is not top-dimensional"));
                    }
                    if p.len() != expected {
                        return Err(format!(
                            "N_{{{g},{n}}}: decomposition has {} curves, expected {expected}",
                            p.len()
                        ));
                    }
                    let mut one_sided = 0usize;
                    for c in &p.curves {
                        let t = lib(classify_type(&model, &lib(c.realize(&model))?))?;
                        if t == TopType::OneSidedEssential {
                            one_sided += 1;
                        }
                    }
                    if one_sided != g as usize {
                        return Err(format!(
                            "N_{{{g},{n}}}: {one_sided} one-sided curves in a decomposition, expected {g}"
                        ));
                    }
                    decomps_checked += 1;
                }
                within(t0, Duration::from_secs(1), &format!("N_{{{g},{n}}}"))?;
            }
            Ok(format!("{decomps_checked} decompositions over 5 surfaces"))
        },
    );
}

#[test]
fn a02_dimension_range_endpoints_and_witnesses() {
    criterion(
        "criterion 2: dimension range endpoints with realizing witnesses",
        || {
            for (g, n, lo, hi) in [(1u32, 4u32, 2i64, 2i64), (2, 3, 2, 3), (3, 4, 5, 6), (5, 0, 4, 6)] {
                let spec = SurfaceSpec::new(g, n);
                let range = lib(dimension_range(spec))?;
                if (range.a_r, range.b_r) != (lo, hi) {
                    return Err(format!(
                        "N_{{{g},{n}}}: dimension range ({}, {}), expected ({lo}, {hi})",
                        range.a_r, range.b_r
                    ));
                }
                let model = lib(build_model(spec))?;
                let top = lib(standard_top_pants(&model))?;
                if top.len() as i64 - 1 != hi {
                    return Err(format!(
                        "N_{{{g},{n}}}: top witness has dimension {}, expected {hi}",
                        top.len() as i64 - 1
                    ));
                }
                let bottom = lib(minimal_pants(&model))?;
                if bottom.len() as i64 - 1 != lo {
                    return Err(format!(
                        "N_{{{g},{n}}}: minimal witness has dimension {}, expected {lo}",
                        bottom.len() as i64 - 1
                    ));
                }
            }
            Ok("4 surfaces, both endpoints realized".into())
        },
    );
}

#[test]
fn a03_linear_families_exist_for_every_chord() {
    criterion(
        "criterion 3: linear decompositions through every chord (n = 4, 5, 6)",
        || {
            let t0 = Instant::now();
            let mut instances = 0u64;
            for n in [4u32, 5, 6] {
                let model = lib(build_model(SurfaceSpec::new(1, n)))?;
                let report = lib(check_cccc(&model))?;
                if !report.passed() {
                    return Err(format!("n = {n}: {}", report.failures.join("; ")));
                }
                if report.instances_checked == 0 {
                    return Err(format!("n = {n}: no chord instances were checked"));
                }
                instances += report.instances_checked;
            }
            within(t0, Duration::from_secs(10), "the three-surface sweep")?;
            Ok(format!("{instances} chord instances"))
        },
    );
}

#[test]
fn a04_replacement_table_rows_hold() {
    criterion(
        "criterion 4: replacement-curve table rows (n = 4, 5, 6)",
        || {
            let mut instances = 0u64;
            for n in [4u32, 5, 6] {
                let model = lib(build_model(SurfaceSpec::new(1, n)))?;
                let report = lib(check_delta_table(&model))?;
                if !report.passed() {
                    return Err(format!("n = {n}: {}", report.failures.join("; ")));
                }
                instances += report.instances_checked;
            }
            Ok(format!("{instances} table rows"))
        },
    );
}

#[test]
fn a05_linear_graph_typing_and_endpoints() {
    criterion(
        "criterion 5: path typing and endpoint typing of the linear graphs (n = 4, 5)",
        || {
            let mut instances = 0u64;
            for n in [4u32, 5] {
                let model = lib(build_model(SurfaceSpec::new(1, n)))?;
                for report in [lib(check_lingraph(&model))?, lib(check_valency1(&model))?] {
                    if !report.passed() {
                        return Err(format!("n = {n}: {}", report.failures.join("; ")));
                    }
                    instances += report.instances_checked;
                }
            }
            Ok(format!("{instances} typing instances"))
        },
    );
}

#[test]
fn a06_triangle_free_adjacency_implies_linear() {
    criterion(
        "criterion 6: triangle-free adjacency graphs are linear (exhaustive, n = 4, 5)",
        || {
            let t0 = Instant::now();
            let mut instances = 0u64;
            for n in [4u32, 5] {
                let model = lib(build_model(SurfaceSpec::new(1, n)))?;
                let report = lib(check_notriangle(&model))?;
                if !report.passed() {
                    return Err(format!("n = {n}: {}", report.failures.join("; ")));
                }
                instances += report.instances_checked;
            }
            within(t0, Duration::from_secs(60), "the exhaustive sweep")?;
            Ok(format!("{instances} decompositions"))
        },
    );
}

#[test]
fn a07_intersection_engines_agree_on_all_vertex_pairs() {
    criterion(
        "criterion 7: chord rules, reduction engine, and polyline oracle agree (g+n <= 6)",
        || {
            let mut pairs = 0u64;
            let mut closed_form_hits = 0u64;
            for g in 0..=6u32 {
                for n in 0..=(6 - g) {
                    let spec = SurfaceSpec::new(g, n);
                    let x = match build_x(spec) {
                        Ok(x) => x,
                        Err(Error::InvalidSurface(_)) | Err(Error::Unsupported(_)) => continue,
                        Err(e) => return Err(e.to_string()),
                    };
                    let model = lib(build_model(spec))?;
                    for a in 0..x.vertex_count() {
                        for b in a + 1..x.vertex_count() {
                            let u = &x.vertices[a];
                            let v = &x.vertices[b];
                            let red = lib(intersection_reduction(&model, u, v))?.value;
                            let oracle = lib(intersection_oracle(&model, u, v))?.value;
                            if red != oracle {
                                return Err(format!(
                                    "N_{{{g},{n}}}: i({}, {}) is {red} by reduction but {oracle} by the oracle",
                                    u.name(), v.name()
                                ));
                            }
                            if let Some(rule) = lib(chord_calculus(&model, u, v))? {
                                closed_form_hits += 1;
                                if rule != red {
                                    return Err(format!(
                                        "N_{{{g},{n}}}: i({}, {}) is {red} by reduction but {rule} by chord rules",
                                        u.name(), v.name()
                                    ));
                                }
                            }
                            pairs += 1;
                        }
                    }
                }
            }
            if pairs == 0 {
                return Err("no vertex pairs were compared".into());
            }
            Ok(format!("{pairs} pairs, {closed_form_hits} with a closed form"))
        },
    );
}

#[test]
fn a08_dehn_twist_contracts() {
    criterion(
        "criterion 8: twist contracts — disjoint fixpoints, invertibility, simultaneous invariance",
        || {
            let mut fixpoint_checks = 0u64;
            let mut inversions = 0u64;
            let mut invariance_checks = 0u64;
            for (g, n) in [(1u32, 3u32), (1, 4)] {
                let spec = SurfaceSpec::new(g, n);
                let model = lib(build_model(spec))?;
                let x = lib(build_x(spec))?;
                let verts = x.vertices.clone();
                let base: Vec<Vec<u64>> = {
                    let mut m = vec![vec![0u64; verts.len()]; verts.len()];
                    for a in 0..verts.len() {
                        for b in a + 1..verts.len() {
                            let v = lib(intersect(&model, &verts[a], &verts[b]))?.value;
                            m[a][b] = v;
                            m[b][a] = v;
                        }
                    }
                    m
                };
                for (ci, c) in verts.iter().enumerate() {
                    if !is_two_sided(&model, c)? {
                        continue;
                    }
                    for power in [-2i64, -1, 0, 1, 2] {
                        // Twisting moves nothing disjoint from the twisting
                        // curve: the image must be the very same description.
                        for (ti, t) in verts.iter().enumerate() {
                            if ti == ci || base[ci][ti] != 0 {
                                continue;
                            }
                            let image = lib(dehn_twist(&model, t, c, power))?;
                            if image != *t {
                                return Err(format!(
                                    "N_{{{g},{n}}}: twisting {} about the disjoint {} moved it",
                                    t.name(), c.name()
                                ));
                            }
                            fixpoint_checks += 1;
                        }
                        if power == 0 {
                            continue;
                        }
                        // Images of the whole vertex set under one twist.
                        let images: Vec<Curve> = verts
                            .iter()
                            .map(|t| lib(dehn_twist(&model, t, c, power)))
                            .collect::<Result<_, _>>()?;
                        // Twisting back restores every curve up to isotopy.
                        for (ti, t) in verts.iter().enumerate() {
                            if base[ci][ti] == 0 {
                                continue;
                            }
                            let back = lib(dehn_twist(&model, &images[ti], c, -power))?;
                            let same = lib(is_isotopic(
                                &model,
                                &lib(back.realize(&model))?,
                                &lib(t.realize(&model))?,
                            ))?;
                            if !same {
                                return Err(format!(
                                    "N_{{{g},{n}}}: twist of power {power} about {} does not invert on {}",
                                    c.name(), t.name()
                                ));
                            }
                            inversions += 1;
                        }
                        // A twist is a homeomorphism: twisting both curves of
                        // a pair preserves their intersection number.
                        for a in 0..verts.len() {
                            for b in a + 1..verts.len() {
                                let after =
                                    lib(intersect(&model, &images[a], &images[b]))?.value;
                                if after != base[a][b] {
                                    return Err(format!(
                                        "N_{{{g},{n}}}: i({}, {}) = {} but {} after twisting both about {} (power {power})",
                                        verts[a].name(), verts[b].name(), base[a][b], after, c.name()
                                    ));
                                }
                                invariance_checks += 1;
                            }
                        }
                    }
                }
            }
            Ok(format!(
                "{fixpoint_checks} fixpoints, {inversions} inversions, {invariance_checks} invariance checks"
            ))
        },
    );
}

#[test]
fn a09_link_of_last_core_matches_cut_surface_complex() {
    criterion(
        "criterion 9: link of the last one-sided core matches the cut surface's complex",
        || {
            for (g, n) in [(1u32, 4u32), (2, 3), (3, 2)] {
                let spec = SurfaceSpec::new(g, n);
                let bij = lib(link_cut_iso(spec))?;
                // Independent recheck from the returned pairs: bijectivity
                // between the link vertices and the cut complex, and edge
                // preservation in both directions.
                let x = lib(build_x(spec))?;
                let y = lib(build_x(SurfaceSpec::new(g - 1, n + 1)))?;
                let core = Curve::alpha(g);
                let core_ix = x
                    .vertex_index(&core)
                    .ok_or_else(|| format!("N_{{{g},{n}}} complex is missing {}", core.name()))?;
                let mut link: Vec<usize> = x
                    .edges
                    .iter()
                    .filter_map(|&(u, v)| {
                        if u == core_ix {
                            Some(v)
                        } else if v == core_ix {
                            Some(u)
                        } else {
                            None
                        }
                    })
                    .collect();
                link.sort_unstable();
                link.dedup();
                if bij.pairs.len() != link.len() || bij.pairs.len() != y.vertex_count() {
                    return Err(format!(
                        "N_{{{g},{n}}}: {} pairs for a link of {} vertices and a cut complex of {}",
                        bij.pairs.len(),
                        link.len(),
                        y.vertex_count()
                    ));
                }
                for &ix in &link {
                    if bij.image_of(&x.vertices[ix]).is_none() {
                        return Err(format!(
                            "N_{{{g},{n}}}: link vertex {} has no image",
                            x.vertices[ix].name()
                        ));
                    }
                }
                for t in &y.vertices {
                    if bij.preimage_of(t).is_none() {
                        return Err(format!(
                            "N_{{{g},{n}}}: cut-surface vertex {} has no preimage",
                            t.name()
                        ));
                    }
                }
                for (ai, &a) in link.iter().enumerate() {
                    for &b in &link[ai + 1..] {
                        let in_x = x.edges.contains(&(a.min(b), a.max(b)));
                        let fa = bij.image_of(&x.vertices[a]).unwrap();
                        let fb = bij.image_of(&x.vertices[b]).unwrap();
                        let (ya, yb) = (
                            y.vertex_index(fa).ok_or("image outside cut complex")?,
                            y.vertex_index(fb).ok_or("image outside cut complex")?,
                        );
                        let in_y = y.edges.contains(&(ya.min(yb), ya.max(yb)));
                        if in_x != in_y {
                            return Err(format!(
                                "N_{{{g},{n}}}: edge {}-{} is {} upstairs but {} downstairs",
                                x.vertices[a].name(),
                                x.vertices[b].name(),
                                if in_x { "present" } else { "absent" },
                                if in_y { "present" } else { "absent" }
                            ));
                        }
                    }
                }
            }
            Ok("3 identifications rechecked edge-by-edge".into())
        },
    );
}

#[test]
fn a10_self_map_enumeration_matches_model_symmetries() {
    criterion(
        "criterion 10: locally injective self-maps all come from model symmetries",
        || {
            let t0 = Instant::now();
            // Pentagon complex: the enumeration must find exactly the ten
            // symmetries of a pentagon, every one matched by a model symmetry.
            let spec5 = SurfaceSpec::new(0, 5);
            let x5 = lib(build_x(spec5))?;
            let maps5 = lib(enumerate_li_self_maps(&x5, None))?;
            if maps5.len() != 10 {
                return Err(format!("pentagon: {} self-maps, expected 10", maps5.len()));
            }
            let syms5 = lib(model_symmetries(spec5))?;
            for map in &maps5 {
                if is_induced_by_symmetry(map, &syms5).is_none() {
                    return Err("a pentagon self-map is not induced by any model symmetry".into());
                }
            }
            // One crosscap, four holes: full enumeration; every map must
            // preserve all topological types and match a model symmetry.
            let spec14 = SurfaceSpec::new(1, 4);
            let model14 = lib(build_model(spec14))?;
            let x14 = lib(build_x(spec14))?;
            let maps14 = lib(enumerate_li_self_maps(&x14, None))?;
            let syms14 = lib(model_symmetries(spec14))?;
            if maps14.is_empty() {
                return Err("no self-maps found on one crosscap with four holes".into());
            }
            for map in &maps14 {
                let mismatches = lib(check_type_preservation(&model14, map))?;
                if !mismatches.is_empty() {
                    return Err(format!(
                        "a self-map changes the type of {}",
                        mismatches[0].curve.name()
                    ));
                }
                if is_induced_by_symmetry(map, &syms14).is_none() {
                    return Err("a self-map is not induced by any model symmetry".into());
                }
            }
            within(t0, Duration::from_secs(60), "both enumerations")?;
            Ok(format!(
                "pentagon: 10 maps; one crosscap, four holes: {} maps",
                maps14.len()
            ))
        },
    );
}

#[test]
fn a11_four_piece_surfaces_admit_twisted_self_maps() {
    criterion(
        "criterion 11: twisted self-maps on every four-piece surface, with a certificate",
        || {
            let t0 = Instant::now();
            for g in 1..=4u32 {
                let spec = SurfaceSpec::new(g, 4 - g);
                let model = lib(build_model(spec))?;
                let (_, map) = lib(build_counterexample(spec))?;
                if !lib(check_simplicial(&model, &map))? {
                    return Err(format!("the self-map on N_{{{g},{}}} is not simplicial", 4 - g));
                }
                if !lib(check_locally_injective(&model, &map))? {
                    return Err(format!(
                        "the self-map on N_{{{g},{}}} is not locally injective",
                        4 - g
                    ));
                }
            }
            let spec13 = SurfaceSpec::new(1, 3);
            let model13 = lib(build_model(spec13))?;
            let (_, map13) = lib(build_counterexample(spec13))?;
            let cert = lib(non_induced_certificate(&model13, &map13))?
                .ok_or("no intersection mismatch found on one crosscap, three holes")?;
            if cert.i_before == cert.i_after {
                return Err("certificate does not witness a changed intersection number".into());
            }
            within(t0, Duration::from_secs(60), "the four-surface sweep")?;
            Ok(format!(
                "4 surfaces; certificate: i({}, {}) changes {} -> {}",
                cert.gamma.name(),
                cert.delta.name(),
                cert.i_before,
                cert.i_after
            ))
        },
    );
}

#[test]
fn a12_star_configurations_leave_one_exceptional_piece() {
    criterion(
        "criterion 12: star cut sets leave exactly one non-pants piece, a two-holed crosscap surface",
        || {
            for (g, n, i, j) in [(2u32, 3u32, 1u32, 3u32), (1, 4, 1, 3), (3, 2, 2, 5)] {
                let spec = SurfaceSpec::new(g, n);
                let model = lib(build_model(spec))?;
                let report = lib(verify_star_configuration(&model, i, j))?;
                if !report.passed() {
                    return Err(format!(
                        "N_{{{g},{n}}}, chord ({i},{j}): {}",
                        report.failures.join("; ")
                    ));
                }
                // Direct structural recheck: cut along the configuration and
                // classify the pieces ourselves.
                let config = lib(build_star_configuration(spec, i, j))?;
                let realized = config
                    .cut_set()
                    .iter()
                    .map(|c| lib(c.realize(&model)))
                    .collect::<Result<Vec<_>, _>>()?;
                let cut = lib(cut_along(&model, &realized))?;
                let exceptional: Vec<_> =
                    cut.components.iter().filter(|c| !c.is_pants()).collect();
                if exceptional.len() != 1 {
                    return Err(format!(
                        "N_{{{g},{n}}}, chord ({i},{j}): {} non-pants pieces, expected 1",
                        exceptional.len()
                    ));
                }
                let piece = exceptional[0];
                if piece.orientable || piece.genus != 1 || piece.boundary_count != 2 {
                    return Err(format!(
                        "N_{{{g},{n}}}, chord ({i},{j}): exceptional piece is orientable={}, genus={}, boundaries={}",
                        piece.orientable, piece.genus, piece.boundary_count
                    ));
                }
            }
            Ok("3 configurations, pieces classified independently".into())
        },
    );
}
