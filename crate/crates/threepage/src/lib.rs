//! Std companion to `threepage-core`: the parallel census driver, JSON
//! serialization of reports, and configuration shared by the command line.

use rayon::prelude::*;
use serde::Serialize;

use threepage_core::census::{
    assemble, enumerate_from_prefix, enumeration_prefixes, fingerprint_word, CensusOptions,
    CensusReport,
};
use threepage_core::error::Result;
use threepage_core::fundgroup::Fingerprint;
use threepage_core::pages::GeneralWord;

/// Runs the census with the requested number of worker threads. The
/// enumeration partitions by two-letter prefix; assembly is sequential and
/// sorted, so the output is deterministic for any worker count.
pub fn run_census(opts: &CensusOptions, jobs: usize) -> Result<CensusReport> {
    if jobs <= 1 {
        return threepage_core::census::census(opts);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let prefixes = enumeration_prefixes(opts);
    let words: Vec<GeneralWord> = pool.install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut local = Vec::new();
                enumerate_from_prefix(opts, prefix, |gw| local.push(gw));
                local
            })
            .reduce(Vec::new, |mut a, mut b| {
                a.append(&mut b);
                a
            })
    });
    // Words shorter than the prefix depth (single points) are not covered
    // by two-letter prefixes; no single point is balanced, so nothing is
    // missed. Deduplicate (prefix extensions are disjoint, but keep this
    // robust) and fingerprint in parallel.
    let mut words = words;
    words.sort_unstable();
    words.dedup();
    let pairs: Vec<(GeneralWord, Fingerprint)> = pool.install(|| {
        words
            .par_iter()
            .map(|gw| fingerprint_word(gw))
            .collect::<Result<Vec<_>>>()
    })?;
    assemble(opts, pairs)
}

/// JSON shape of one census class (one line per class in `--json` output).
#[derive(Serialize)]
pub struct ClassRecord {
    pub canonical: String,
    pub ar: usize,
    pub complexity: usize,
    pub category: String,
    pub fingerprint: FingerprintRecord,
    pub members: usize,
    pub disjoint_union: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub prover_groups: Option<usize>,
}

#[derive(Serialize)]
pub struct FingerprintRecord {
    pub vertex_degrees: Vec<u16>,
    pub graph_code: Vec<(u8, u8)>,
    pub components: usize,
    pub h1_rank: usize,
    pub h1_torsion: Vec<u64>,
    pub hom_s3: Option<u64>,
    pub hom_s4: Option<u64>,
}

pub fn fingerprint_record(fp: &Fingerprint) -> FingerprintRecord {
    FingerprintRecord {
        vertex_degrees: fp.vertex_degrees.clone(),
        graph_code: fp.graph_code.clone(),
        components: fp.components,
        h1_rank: fp.h1_rank,
        h1_torsion: fp.h1_torsion.clone(),
        hom_s3: fp.homs[0],
        hom_s4: fp.homs[1],
    }
}

pub fn class_records(report: &CensusReport) -> Vec<ClassRecord> {
    report
        .classes
        .iter()
        .map(|c| ClassRecord {
            canonical: c.representative.render(),
            ar: c.min_ar,
            complexity: c.complexity(),
            category: c.category.name().to_string(),
            fingerprint: fingerprint_record(&c.fingerprint),
            members: c.members,
            disjoint_union: c.disjoint_union,
            prover_groups: c.prover_subclasses,
        })
        .collect()
}

/// Environment-variable fallback for a numeric flag (prefix `THREEPAGE_`).
pub fn env_usize(name: &str, default: usize) -> usize {
    std::env::var(name)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parallel_census_matches_sequential() {
        let opts = CensusOptions::links(4);
        let seq = threepage_core::census::census(&opts).unwrap();
        let par = run_census(&opts, 4).unwrap();
        let key = |r: &CensusReport| -> Vec<(String, usize)> {
            r.classes
                .iter()
                .map(|c| (c.fingerprint.render(), c.min_ar))
                .collect()
        };
        assert_eq!(key(&seq), key(&par));
        // Member counts agree too.
        let members = |r: &CensusReport| -> Vec<usize> {
            r.classes.iter().map(|c| c.members).collect()
        };
        assert_eq!(members(&seq), members(&par));
    }

    #[test]
    fn class_records_serialize() {
        let opts = CensusOptions::links(2);
        let report = run_census(&opts, 1).unwrap();
        let records = class_records(&report);
        assert_eq!(records.len(), 1);
        let json = serde_json::to_string(&records[0]).unwrap();
        assert!(json.contains("\"complexity\":0"));
        assert!(json.contains("\"hom_s3\":6"));
    }
}
