//! Shared helpers for integration tests: a generator of well-formed risk
//! models and fixture accessors.

#![allow(dead_code)]

use std::collections::BTreeSet;

use haratara::model::*;
use proptest::prelude::*;
use proptest::sample::select;

pub fn fixture() -> RiskModel {
    haratara::parse_model(haratara::fixture::AD_PERCEPTION).expect("fixture parses")
}

fn id() -> impl Strategy<Value = String> {
    "[A-Za-z][A-Za-z0-9_]{0,4}(-[A-Za-z0-9_]{1,3})?"
}

/// Non-blank text with quotes, backslashes, comment and brace characters,
/// and irregular whitespace.
fn text() -> impl Strategy<Value = String> {
    "[ \t\n]{0,2}[a-zA-Z\"\\\\#{}é][ -~\t\näß]{0,24}"
}

fn any_text() -> impl Strategy<Value = String> {
    "[ -~\t\n]{0,12}"
}

fn literal<T: Literal + std::fmt::Debug>() -> impl Strategy<Value = T> {
    select(T::ALL)
}

fn asset(id: String) -> impl Strategy<Value = Asset> {
    (
        text(),
        prop::collection::btree_set((literal::<Limitation>(), literal::<SecurityProperty>()), 1..4),
        prop::collection::vec(text(), 4),
    )
        .prop_map(move |(name, pairs, goals)| Asset {
            id: Id::new(id.clone()),
            name,
            protections: pairs
                .into_iter()
                .zip(goals.into_iter().cycle())
                .map(|((limitation, property), goal)| Protection {
                    limitation,
                    property,
                    goal,
                })
                .collect::<Vec<_>>(),
        })
        .prop_flat_map(|a| {
            let protections = a.protections.clone();
            Just(protections).prop_shuffle().prop_map(move |p| Asset {
                protections: p,
                ..a.clone()
            })
        })
}

fn hazard(id: String) -> impl Strategy<Value = Hazard> {
    (
        literal::<Limitation>(),
        text(),
        literal::<SeverityClass>(),
        literal::<ExposureClass>(),
        literal::<ControllabilityClass>(),
        prop::option::of(text()),
    )
        .prop_map(move |(limitation, description, severity, exposure, controllability, safety_goal)| Hazard {
            id: Id::new(id.clone()),
            limitation,
            description,
            severity,
            exposure,
            controllability,
            safety_goal,
        })
}

fn threat(id: String, assets: Vec<Id>) -> impl Strategy<Value = Threat> {
    (
        select(assets),
        literal::<Limitation>(),
        text(),
        literal::<QualLevel>(),
        literal::<QualLevel>(),
        literal::<Treatment>(),
        prop::option::of(any_text()),
        prop::option::of((literal::<QualLevel>(), text())),
    )
        .prop_map(
            move |(asset, limitation, scenario, impact, feasibility, treatment, damage, ovr)| Threat {
                id: Id::new(id.clone()),
                asset,
                limitation,
                scenario,
                impact,
                feasibility,
                treatment,
                damage,
                risk_override: ovr.map(|(level, rationale)| RiskOverride { level, rationale }),
            },
        )
}

fn unique_ids(max: usize) -> impl Strategy<Value = Vec<String>> {
    prop::collection::btree_set(id(), 0..max)
        .prop_map(|s: BTreeSet<String>| s.into_iter().collect::<Vec<_>>())
        .prop_shuffle()
}

/// Well-formed models: unique ids, resolvable references, non-blank text.
/// Declaration order and whitespace are deliberately non-canonical.
pub fn model() -> impl Strategy<Value = RiskModel> {
    let item = (text(), prop::collection::vec(text(), 1..4));
    let assets = unique_ids(4).prop_flat_map(|ids| ids.into_iter().map(asset).collect::<Vec<_>>());
    let hazards = unique_ids(6).prop_flat_map(|ids| ids.into_iter().map(hazard).collect::<Vec<_>>());
    (item, assets, hazards)
        .prop_flat_map(|((name, functions), assets, hazards)| {
            let asset_ids: Vec<Id> = assets.iter().map(|a| a.id.clone()).collect();
            let threats = if asset_ids.is_empty() {
                Just(Vec::new()).boxed()
            } else {
                unique_ids(6)
                    .prop_flat_map(move |ids| {
                        ids.into_iter()
                            .map(|id| threat(id, asset_ids.clone()))
                            .collect::<Vec<_>>()
                    })
                    .boxed()
            };
            (Just((name, functions, assets, hazards)), threats)
        })
        .prop_flat_map(|((name, functions, assets, hazards), threats)| {
            let hazard_ids: Vec<Id> = hazards.iter().map(|h| h.id.clone()).collect();
            let threat_ids: Vec<Id> = threats.iter().map(|t| t.id.clone()).collect();
            let links = if hazard_ids.is_empty() || threat_ids.is_empty() {
                Just(Vec::new()).boxed()
            } else {
                prop::collection::vec((select(hazard_ids), select(threat_ids)), 0..4)
                    .prop_map(|pairs| {
                        pairs
                            .into_iter()
                            .map(|(hazard, threat)| Link { hazard, threat })
                            .collect()
                    })
                    .boxed()
            };
            (Just(RiskModel {
                item: Item { name, functions },
                assets,
                hazards,
                threats,
                links: Vec::new(),
            }), links)
                .prop_map(|(mut m, links)| {
                    m.links = links;
                    m
                })
        })
}
