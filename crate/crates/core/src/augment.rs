//! Label-preserving dataset augmentation by constituent replacement.
//!
//! Each training example is a pair of constituents. New examples are
//! generated by replacing one constituent with a synonym or paraphrase
//! (the unigram condition), both constituents at once (the bigram
//! condition), or both ways combined. Augmented examples inherit the
//! label of their source example and record what was replaced and via
//! which relation.
//!
//! Dataset files are UTF-8 TSV: `w1<TAB>w2<TAB>label`, with multiword
//! constituents using single internal spaces and `#` starting comment
//! lines. Augmented datasets are written with two extra columns:
//! `provenance` (`orig` or `aug:<source_id>:<slots>`) and `relation`.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::lexicon::{
    query_paraphrases, synonyms_all, synonyms_first, ParaphraseStore, Relation, SynsetLexicon,
    Tier,
};

/// Which constituent slots of the source example were replaced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slots {
    W1,
    W2,
    Both,
}

impl Slots {
    pub fn label(self) -> &'static str {
        match self {
            Slots::W1 => "w1",
            Slots::W2 => "w2",
            Slots::Both => "w1w2",
        }
    }

    fn parse(label: &str) -> Option<Slots> {
        match label {
            "w1" => Some(Slots::W1),
            "w2" => Some(Slots::W2),
            "w1w2" => Some(Slots::Both),
            _ => None,
        }
    }
}

/// Where an example came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Original,
    Augmented {
        source_id: String,
        replaced: Slots,
        relation: Relation,
    },
}

impl Provenance {
    pub fn is_original(&self) -> bool {
        matches!(self, Provenance::Original)
    }

    /// Relation suitable for featurization: originals and synset-derived
    /// examples carry `Relation::None`.
    pub fn relation(&self) -> Relation {
        match self {
            Provenance::Original => Relation::None,
            Provenance::Augmented { relation, .. } => *relation,
        }
    }
}

/// A labeled two-constituent example.
#[derive(Debug, Clone, PartialEq)]
pub struct PairExample {
    pub id: String,
    pub w1: Vec<String>,
    pub w2: Vec<String>,
    pub label: String,
    pub provenance: Provenance,
}

impl PairExample {
    pub fn original(id: impl Into<String>, w1: &str, w2: &str, label: impl Into<String>) -> Self {
        PairExample {
            id: id.into(),
            w1: split_tokens(w1),
            w2: split_tokens(w2),
            label: label.into(),
            provenance: Provenance::Original,
        }
    }

    /// The `(w1, w2)` surface pair as space-joined strings.
    pub fn surface(&self) -> (String, String) {
        (self.w1.join(" "), self.w2.join(" "))
    }
}

fn split_tokens(phrase: &str) -> Vec<String> {
    phrase.split(' ').map(str::to_string).collect()
}

/// Synonym source for augmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SynonymSource {
    /// No augmentation: the dataset passes through unchanged.
    OriginalOnly,
    /// Paraphrase table at the given (cumulative) tier.
    Ppdb { tier: Tier },
    /// Lemmas of the most frequent sense.
    WnFirst,
    /// Lemmas of all senses.
    WnAll,
}

impl fmt::Display for SynonymSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SynonymSource::OriginalOnly => write!(f, "original"),
            SynonymSource::Ppdb { tier } => write!(f, "ppdb-{}", tier.label().to_lowercase()),
            SynonymSource::WnFirst => write!(f, "wn-first"),
            SynonymSource::WnAll => write!(f, "wn-all"),
        }
    }
}

/// Replacement condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Replace one constituent at a time (both slots).
    Unigram,
    /// Replace both constituents at once.
    Bigram,
    /// Union of the unigram and bigram conditions.
    UnigramPlusBigram,
    /// Replace only the first constituent.
    FirstOnly,
    /// Replace only the second constituent.
    SecondOnly,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Unigram => "unigram",
            Condition::Bigram => "bigram",
            Condition::UnigramPlusBigram => "unigram+bigram",
            Condition::FirstOnly => "first-only",
            Condition::SecondOnly => "second-only",
        };
        f.write_str(s)
    }
}

/// Full augmentation setting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AugmentationSetting {
    pub source: SynonymSource,
    pub condition: Condition,
    /// Drop augmented examples whose surface pair occurs in the
    /// evaluation sets. Off by default.
    pub filter_eval_overlap: bool,
    /// Collapse exact `(w1, w2, label)` duplicates, keeping the earliest
    /// (originals win over augmented). On by default.
    pub dedupe: bool,
}

impl AugmentationSetting {
    pub fn new(source: SynonymSource, condition: Condition) -> Self {
        AugmentationSetting {
            source,
            condition,
            filter_eval_overlap: false,
            dedupe: true,
        }
    }

    pub fn original_only() -> Self {
        AugmentationSetting::new(SynonymSource::OriginalOnly, Condition::Unigram)
    }
}

/// Loaded lexical resources handed to the augmenter.
#[derive(Debug, Clone, Copy, Default)]
pub struct AugmentResources<'a> {
    pub paraphrases: Option<&'a ParaphraseStore>,
    pub synsets: Option<&'a SynsetLexicon>,
}

#[derive(Debug, Error)]
pub enum AugmentError {
    #[error("source {0} requires a paraphrase table but none was provided")]
    MissingParaphrases(SynonymSourceName),
    #[error("source {0} requires a synset lexicon but none was provided")]
    MissingSynsets(SynonymSourceName),
    #[error("filter_eval_overlap is set but no evaluation pairs were provided")]
    MissingEvalIds,
    #[error("size report requires a nonempty original dataset")]
    EmptyOriginal,
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {reason}")]
    Row {
        path: PathBuf,
        line: usize,
        reason: String,
    },
}

/// Display-only wrapper so errors can name the offending source.
#[derive(Debug, Clone, Copy)]
pub struct SynonymSourceName(pub SynonymSource);

impl fmt::Display for SynonymSourceName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Lowercase every constituent token; id, label, and provenance are
/// untouched. Idempotent.
pub fn preprocess(ex: &PairExample) -> PairExample {
    PairExample {
        id: ex.id.clone(),
        w1: ex.w1.iter().map(|t| t.to_lowercase()).collect(),
        w2: ex.w2.iter().map(|t| t.to_lowercase()).collect(),
        label: ex.label.clone(),
        provenance: ex.provenance.clone(),
    }
}

/// Lowercase a whole dataset.
pub fn preprocess_all(data: &[PairExample]) -> Vec<PairExample> {
    data.iter().map(preprocess).collect()
}

enum ResolvedSource<'a> {
    Ppdb { store: &'a ParaphraseStore, tier: Tier },
    Wn { lexicon: &'a SynsetLexicon, all_senses: bool },
}

fn resolve_source<'a>(
    source: SynonymSource,
    resources: &AugmentResources<'a>,
) -> Result<Option<ResolvedSource<'a>>, AugmentError> {
    match source {
        SynonymSource::OriginalOnly => Ok(None),
        SynonymSource::Ppdb { tier } => match resources.paraphrases {
            Some(store) => Ok(Some(ResolvedSource::Ppdb { store, tier })),
            None => Err(AugmentError::MissingParaphrases(SynonymSourceName(source))),
        },
        SynonymSource::WnFirst | SynonymSource::WnAll => match resources.synsets {
            Some(lexicon) => Ok(Some(ResolvedSource::Wn {
                lexicon,
                all_senses: matches!(source, SynonymSource::WnAll),
            })),
            None => Err(AugmentError::MissingSynsets(SynonymSourceName(source))),
        },
    }
}

/// Replacement candidates for a single constituent, in deterministic
/// order (paraphrase query order, or sorted lemma order for synsets).
/// The original constituent itself is never a candidate.
fn unigram_candidates(source: &ResolvedSource, constituent: &[String]) -> Vec<(Vec<String>, Relation)> {
    match source {
        ResolvedSource::Ppdb { store, tier } => query_paraphrases(store, constituent, *tier)
            .into_iter()
            .map(|e| (e.target, e.relation))
            .collect(),
        ResolvedSource::Wn { lexicon, all_senses } => {
            let word = constituent.join(" ");
            let lemmas = if *all_senses {
                synonyms_all(lexicon, &word)
            } else {
                synonyms_first(lexicon, &word)
            };
            lemmas
                .into_iter()
                .map(|lemma| split_tokens(&lemma))
                .filter(|tokens| tokens != constituent)
                .map(|tokens| (tokens, Relation::None))
                .collect()
        }
    }
}

fn make_augmented(
    ex: &PairExample,
    w1: Vec<String>,
    w2: Vec<String>,
    replaced: Slots,
    relation: Relation,
    id: String,
) -> PairExample {
    PairExample {
        id,
        w1,
        w2,
        label: ex.label.clone(),
        provenance: Provenance::Augmented {
            source_id: ex.id.clone(),
            replaced,
            relation,
        },
    }
}

fn unigram_for(ex: &PairExample, source: &ResolvedSource, slots: &[Slots]) -> Vec<PairExample> {
    let mut out = Vec::new();
    for &slot in slots {
        let constituent = match slot {
            Slots::W1 => &ex.w1,
            Slots::W2 => &ex.w2,
            Slots::Both => continue,
        };
        for (target, relation) in unigram_candidates(source, constituent) {
            if &target == constituent {
                continue;
            }
            let (w1, w2) = match slot {
                Slots::W1 => (target, ex.w2.clone()),
                Slots::W2 => (ex.w1.clone(), target),
                Slots::Both => unreachable!(),
            };
            let id = format!("{}:u{}", ex.id, out.len());
            out.push(make_augmented(ex, w1, w2, slot, relation, id));
        }
    }
    out
}

/// Replace one constituent at a time. `slots` selects which constituents
/// are eligible; outputs for `w1` precede outputs for `w2`, each in
/// candidate order.
pub fn augment_unigram(
    ex: &PairExample,
    source: SynonymSource,
    resources: &AugmentResources,
    slots: &[Slots],
) -> Result<Vec<PairExample>, AugmentError> {
    match resolve_source(source, resources)? {
        Some(resolved) => Ok(unigram_for(ex, &resolved, slots)),
        None => Ok(Vec::new()),
    }
}

fn bigram_for(ex: &PairExample, source: &ResolvedSource) -> (Vec<PairExample>, usize) {
    let mut out = Vec::new();
    let mut skipped = 0;
    match source {
        ResolvedSource::Ppdb { store, tier } => {
            let mut phrase = ex.w1.clone();
            phrase.extend(ex.w2.iter().cloned());
            for entry in query_paraphrases(store, &phrase, *tier) {
                if entry.target.len() != 2 {
                    skipped += 1;
                    continue;
                }
                let w1 = vec![entry.target[0].clone()];
                let w2 = vec![entry.target[1].clone()];
                let id = format!("{}:b{}", ex.id, out.len());
                out.push(make_augmented(ex, w1, w2, Slots::Both, entry.relation, id));
            }
        }
        ResolvedSource::Wn { lexicon, all_senses } => {
            let lookup = |constituent: &[String]| {
                let word = constituent.join(" ");
                if *all_senses {
                    synonyms_all(lexicon, &word)
                } else {
                    synonyms_first(lexicon, &word)
                }
            };
            let syn1 = lookup(&ex.w1);
            let syn2 = lookup(&ex.w2);
            for a in &syn1 {
                let w1 = split_tokens(a);
                for b in &syn2 {
                    let w2 = split_tokens(b);
                    if w1 == ex.w1 && w2 == ex.w2 {
                        continue;
                    }
                    let id = format!("{}:b{}", ex.id, out.len());
                    out.push(make_augmented(ex, w1, w2.clone(), Slots::Both, Relation::None, id));
                }
            }
        }
    }
    (out, skipped)
}

/// Replace both constituents at once. With a paraphrase source the
/// combined phrase `w1 w2` is looked up and only 2-token targets are
/// used (others are counted in the second return value). With a synset
/// source the cartesian product of per-constituent synonym sets is
/// generated, excluding the identity pair.
pub fn augment_bigram(
    ex: &PairExample,
    source: SynonymSource,
    resources: &AugmentResources,
) -> Result<(Vec<PairExample>, usize), AugmentError> {
    match resolve_source(source, resources)? {
        Some(resolved) => Ok(bigram_for(ex, &resolved)),
        None => Ok((Vec::new(), 0)),
    }
}

/// Output of [`augment_dataset`].
#[derive(Debug, Clone)]
pub struct AugmentOutput {
    pub examples: Vec<PairExample>,
    /// Bigram paraphrase targets dropped because they were not exactly
    /// two tokens.
    pub bigram_targets_skipped: usize,
}

impl AugmentOutput {
    /// Ratio of output size to input size.
    pub fn size_coefficient(&self, original_n: usize) -> Result<f64, AugmentError> {
        size_report(original_n, self.examples.len())
    }
}

/// Augment a whole dataset. The output keeps every original example (in
/// input order) followed by the augmented examples: all unigram-route
/// outputs first, then all bigram-route outputs, each grouped by source
/// example in input order. See [`AugmentationSetting`] for deduplication
/// and overlap filtering.
pub fn augment_dataset(
    data: &[PairExample],
    setting: &AugmentationSetting,
    resources: &AugmentResources,
    eval_ids: Option<&HashSet<(String, String)>>,
) -> Result<AugmentOutput, AugmentError> {
    if setting.filter_eval_overlap && eval_ids.is_none() {
        return Err(AugmentError::MissingEvalIds);
    }
    let Some(resolved) = resolve_source(setting.source, resources)? else {
        return Ok(AugmentOutput {
            examples: data.to_vec(),
            bigram_targets_skipped: 0,
        });
    };

    let unigram_slots: Option<&[Slots]> = match setting.condition {
        Condition::Unigram | Condition::UnigramPlusBigram => Some(&[Slots::W1, Slots::W2]),
        Condition::FirstOnly => Some(&[Slots::W1]),
        Condition::SecondOnly => Some(&[Slots::W2]),
        Condition::Bigram => None,
    };
    let with_bigram = matches!(
        setting.condition,
        Condition::Bigram | Condition::UnigramPlusBigram
    );

    let mut augmented = Vec::new();
    let mut bigram_targets_skipped = 0;
    if let Some(slots) = unigram_slots {
        for ex in data {
            augmented.extend(unigram_for(ex, &resolved, slots));
        }
    }
    if with_bigram {
        for ex in data {
            let (examples, skipped) = bigram_for(ex, &resolved);
            augmented.extend(examples);
            bigram_targets_skipped += skipped;
        }
    }

    if setting.filter_eval_overlap {
        let eval_ids = eval_ids.expect("checked above");
        augmented.retain(|ex| !eval_ids.contains(&ex.surface()));
    }

    let mut examples: Vec<PairExample> = Vec::with_capacity(data.len() + augmented.len());
    examples.extend(data.iter().cloned());
    examples.extend(augmented);
    if setting.dedupe {
        let mut seen = HashSet::new();
        examples.retain(|ex| seen.insert((ex.w1.clone(), ex.w2.clone(), ex.label.clone())));
    }

    Ok(AugmentOutput {
        examples,
        bigram_targets_skipped,
    })
}

/// Size-increase coefficient: augmented size over original size.
pub fn size_report(original_n: usize, augmented_n: usize) -> Result<f64, AugmentError> {
    if original_n == 0 {
        return Err(AugmentError::EmptyOriginal);
    }
    Ok(augmented_n as f64 / original_n as f64)
}

fn parse_provenance(field: &str, relation: Relation) -> Result<Provenance, String> {
    if field == "orig" {
        return Ok(Provenance::Original);
    }
    let parts: Vec<&str> = field.split(':').collect();
    if parts.len() < 3 || parts[0] != "aug" {
        return Err(format!("bad provenance \"{field}\""));
    }
    let slots = Slots::parse(parts[parts.len() - 1])
        .ok_or_else(|| format!("bad slots in provenance \"{field}\""))?;
    let source_id = parts[1..parts.len() - 1].join(":");
    Ok(Provenance::Augmented {
        source_id,
        replaced: slots,
        relation,
    })
}

/// Read a dataset TSV. Both the 3-column original format and the
/// 5-column augmented format are accepted; ids are assigned by row
/// order (`e0`, `e1`, ...).
pub fn read_dataset(path: &Path) -> Result<Vec<PairExample>, AugmentError> {
    let file = File::open(path).map_err(|source| AugmentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reader = BufReader::new(file);
    let mut examples = Vec::new();
    for (line_no, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| AugmentError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let row = |reason: String| AugmentError::Row {
            path: path.to_path_buf(),
            line: line_no + 1,
            reason,
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 && fields.len() != 5 {
            return Err(row(format!(
                "expected 3 or 5 tab-separated fields, got {}",
                fields.len()
            )));
        }
        let w1 = split_tokens(fields[0]);
        let w2 = split_tokens(fields[1]);
        if w1.iter().any(|t| t.is_empty()) || w2.iter().any(|t| t.is_empty()) {
            return Err(row("empty constituent token".to_string()));
        }
        if fields[2].is_empty() {
            return Err(row("empty label".to_string()));
        }
        let provenance = if fields.len() == 5 {
            let relation = Relation::parse(fields[4])
                .ok_or_else(|| row(format!("unknown relation label \"{}\"", fields[4])))?;
            parse_provenance(fields[3], relation).map_err(row)?
        } else {
            Provenance::Original
        };
        examples.push(PairExample {
            id: format!("e{}", examples.len()),
            w1,
            w2,
            label: fields[2].to_string(),
            provenance,
        });
    }
    Ok(examples)
}

/// Write a dataset in the 5-column augmented format.
pub fn write_dataset(path: &Path, examples: &[PairExample]) -> Result<(), AugmentError> {
    let file = File::create(path).map_err(|source| AugmentError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut writer = BufWriter::new(file);
    let io_err = |source| AugmentError::Io {
        path: path.to_path_buf(),
        source,
    };
    for ex in examples {
        let (prov, relation) = match &ex.provenance {
            Provenance::Original => ("orig".to_string(), Relation::None),
            Provenance::Augmented {
                source_id,
                replaced,
                relation,
            } => (format!("aug:{}:{}", source_id, replaced.label()), *relation),
        };
        writeln!(
            writer,
            "{}\t{}\t{}\t{}\t{}",
            ex.w1.join(" "),
            ex.w2.join(" "),
            ex.label,
            prov,
            relation.label()
        )
        .map_err(io_err)?;
    }
    writer.flush().map_err(io_err)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::{load_paraphrases, load_synsets, LoadMode};
    use std::io::Write as _;

    fn write_tmp(content: &str) -> tempfile::NamedTempFile {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(content.as_bytes()).unwrap();
        f
    }

    /// dog -> {canine, hound}, house -> {home} toy lexicon.
    fn toy_synsets() -> SynsetLexicon {
        let f = write_tmp(
            "dog\t1\tS1\ncanine\t1\tS1\nhound\t1\tS1\n\
             house\t1\tS2\nhome\t1\tS2\n",
        );
        load_synsets(f.path()).unwrap()
    }

    fn surfaces(examples: &[PairExample]) -> Vec<(String, String)> {
        examples.iter().map(PairExample::surface).collect()
    }

    #[test]
    fn preprocess_lowercases_tokens() {
        let ex = PairExample::original("e0", "Black", "Monday", "TIME");
        let pre = preprocess(&ex);
        assert_eq!(pre.surface(), ("black".to_string(), "monday".to_string()));
        assert_eq!(pre.label, "TIME");
        assert_eq!(pre.id, "e0");
        assert!(pre.provenance.is_original());
    }

    #[test]
    fn preprocess_is_idempotent() {
        let ex = PairExample::original("e0", "dog", "house", "L");
        assert_eq!(preprocess(&ex), ex);
    }

    #[test]
    fn preprocess_keeps_token_count_of_multiword_constituents() {
        let ex = PairExample::original("e0", "International Organization for Migration", "budget", "L");
        let pre = preprocess(&ex);
        assert_eq!(pre.w1.len(), 4);
        assert_eq!(pre.w1.join(" "), "international organization for migration");
    }

    #[test]
    fn unigram_replaces_each_slot() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "dog", "house", "L");
        let out = augment_unigram(&ex, SynonymSource::WnFirst, &resources, &[Slots::W1, Slots::W2])
            .unwrap();
        let got: HashSet<(String, String)> = surfaces(&out).into_iter().collect();
        let expect: HashSet<(String, String)> = [
            ("canine", "house"),
            ("hound", "house"),
            ("dog", "home"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(got, expect);
        for aug in &out {
            assert_eq!(aug.label, "L");
            match &aug.provenance {
                Provenance::Augmented { source_id, relation, .. } => {
                    assert_eq!(source_id, "e0");
                    assert_eq!(*relation, Relation::None);
                }
                other => panic!("expected augmented provenance, got {other:?}"),
            }
        }
    }

    #[test]
    fn unigram_via_paraphrases_carries_relation() {
        let f = write_tmp("NN\tS\tfamily\tfamilies\tEQUIV\t0.9\n");
        let store = load_paraphrases(f.path(), None, LoadMode::Lenient).unwrap();
        let resources = AugmentResources {
            paraphrases: Some(&store),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "family", "background", "COMPLEMENT");
        let out = augment_unigram(
            &ex,
            SynonymSource::Ppdb { tier: Tier::S },
            &resources,
            &[Slots::W1, Slots::W2],
        )
        .unwrap();
        assert_eq!(surfaces(&out), vec![("families".to_string(), "background".to_string())]);
        assert_eq!(out[0].provenance.relation(), Relation::Equivalence);
    }

    #[test]
    fn unigram_with_no_synonyms_is_empty() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "zebra", "crossing", "L");
        let out =
            augment_unigram(&ex, SynonymSource::WnAll, &resources, &[Slots::W1, Slots::W2]).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn bigram_paraphrase_splits_two_token_target() {
        let f = write_tmp("NN\tS\tcare center\tcare centre\tEQUIV\t0.95\nNN\tS\tcare center\tdaycare\tEQUIV\t0.5\n");
        let store = load_paraphrases(f.path(), None, LoadMode::Lenient).unwrap();
        let resources = AugmentResources {
            paraphrases: Some(&store),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "care", "center", "PURPOSE");
        let (out, skipped) =
            augment_bigram(&ex, SynonymSource::Ppdb { tier: Tier::S }, &resources).unwrap();
        assert_eq!(surfaces(&out), vec![("care".to_string(), "centre".to_string())]);
        // The 1-token target "daycare" cannot fill two constituent slots.
        assert_eq!(skipped, 1);
        match &out[0].provenance {
            Provenance::Augmented { replaced, .. } => assert_eq!(*replaced, Slots::Both),
            other => panic!("expected augmented provenance, got {other:?}"),
        }
    }

    #[test]
    fn bigram_synset_cross_product_excludes_identity() {
        let f = write_tmp("dog\t1\tS1\ncanine\t1\tS1\nhouse\t1\tS2\nhome\t1\tS2\n");
        let lex = load_synsets(f.path()).unwrap();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "dog", "house", "L");
        let (out, skipped) = augment_bigram(&ex, SynonymSource::WnFirst, &resources).unwrap();
        assert_eq!(skipped, 0);
        let got: HashSet<(String, String)> = surfaces(&out).into_iter().collect();
        let expect: HashSet<(String, String)> = [
            ("canine", "house"),
            ("dog", "home"),
            ("canine", "home"),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn bigram_with_no_entries_is_empty() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let ex = PairExample::original("e0", "zebra", "crossing", "L");
        let (out, skipped) = augment_bigram(&ex, SynonymSource::WnFirst, &resources).unwrap();
        assert!(out.is_empty());
        assert_eq!(skipped, 0);
    }

    #[test]
    fn original_only_passes_data_through() {
        let data = vec![
            PairExample::original("e0", "dog", "house", "L1"),
            PairExample::original("e1", "dog", "house", "L1"), // duplicate stays
        ];
        let out = augment_dataset(
            &data,
            &AugmentationSetting::original_only(),
            &AugmentResources::default(),
            None,
        )
        .unwrap();
        assert_eq!(out.examples, data);
    }

    #[test]
    fn unigram_dataset_keeps_original_and_adds_three() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let setting = AugmentationSetting::new(SynonymSource::WnFirst, Condition::Unigram);
        let out = augment_dataset(&data, &setting, &resources, None).unwrap();
        assert_eq!(out.examples.len(), 4);
        assert!(out.examples[0].provenance.is_original());
        assert_eq!(out.size_coefficient(data.len()).unwrap(), 4.0);
    }

    #[test]
    fn combined_condition_equals_deduped_union() {
        let lex = toy_synsets();
        let f = write_tmp("NN\tS\tdog house\tpet shelter\tEQUIV\t0.8\n");
        let store = load_paraphrases(f.path(), None, LoadMode::Lenient).unwrap();
        let resources = AugmentResources {
            paraphrases: Some(&store),
            synsets: Some(&lex),
        };
        let data = vec![
            PairExample::original("e0", "dog", "house", "L"),
            PairExample::original("e1", "dog", "home", "L"),
        ];
        for source in [SynonymSource::WnFirst, SynonymSource::Ppdb { tier: Tier::Xxxl }] {
            let combined = augment_dataset(
                &data,
                &AugmentationSetting::new(source, Condition::UnigramPlusBigram),
                &resources,
                None,
            )
            .unwrap();
            let unigram = augment_dataset(
                &data,
                &AugmentationSetting::new(source, Condition::Unigram),
                &resources,
                None,
            )
            .unwrap();
            let bigram = augment_dataset(
                &data,
                &AugmentationSetting::new(source, Condition::Bigram),
                &resources,
                None,
            )
            .unwrap();
            let mut union = unigram.examples.clone();
            union.extend(bigram.examples.clone());
            let mut seen = HashSet::new();
            union.retain(|ex| seen.insert((ex.w1.clone(), ex.w2.clone(), ex.label.clone())));
            let key = |ex: &PairExample| {
                (ex.surface(), ex.label.clone(), ex.provenance.relation())
            };
            assert_eq!(
                combined.examples.iter().map(key).collect::<Vec<_>>(),
                union.iter().map(key).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn dedupe_keeps_earliest_and_originals_win() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        // The augmentation of e0 regenerates e1's surface pair.
        let data = vec![
            PairExample::original("e0", "dog", "house", "L"),
            PairExample::original("e1", "canine", "house", "L"),
        ];
        let setting = AugmentationSetting::new(SynonymSource::WnFirst, Condition::Unigram);
        let out = augment_dataset(&data, &setting, &resources, None).unwrap();
        let canine_house: Vec<_> = out
            .examples
            .iter()
            .filter(|ex| ex.surface() == ("canine".to_string(), "house".to_string()))
            .collect();
        assert_eq!(canine_house.len(), 1);
        assert!(canine_house[0].provenance.is_original());
    }

    #[test]
    fn eval_overlap_filter_drops_augmented_pairs() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let mut setting = AugmentationSetting::new(SynonymSource::WnFirst, Condition::Unigram);
        setting.filter_eval_overlap = true;
        let eval_ids: HashSet<(String, String)> =
            [("canine".to_string(), "house".to_string())].into_iter().collect();
        let out = augment_dataset(&data, &setting, &resources, Some(&eval_ids)).unwrap();
        assert_eq!(out.examples.len(), 3);
        assert!(!surfaces(&out.examples).contains(&("canine".to_string(), "house".to_string())));
    }

    #[test]
    fn eval_overlap_filter_requires_eval_ids() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let mut setting = AugmentationSetting::new(SynonymSource::WnFirst, Condition::Unigram);
        setting.filter_eval_overlap = true;
        let err = augment_dataset(&data, &setting, &resources, None).unwrap_err();
        assert!(matches!(err, AugmentError::MissingEvalIds));
    }

    #[test]
    fn size_report_examples() {
        assert_eq!(size_report(10, 10).unwrap(), 1.0);
        assert_eq!(size_report(10, 12).unwrap(), 1.2);
        assert_eq!(size_report(1, 4).unwrap(), 4.0);
        assert!(size_report(0, 4).is_err());
    }

    #[test]
    fn first_only_and_second_only_slots() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let first = augment_dataset(
            &data,
            &AugmentationSetting::new(SynonymSource::WnFirst, Condition::FirstOnly),
            &resources,
            None,
        )
        .unwrap();
        // original + canine/hound replacements of w1
        assert_eq!(first.examples.len(), 3);
        let second = augment_dataset(
            &data,
            &AugmentationSetting::new(SynonymSource::WnFirst, Condition::SecondOnly),
            &resources,
            None,
        )
        .unwrap();
        assert_eq!(second.examples.len(), 2);
    }

    #[test]
    fn dataset_roundtrip_preserves_provenance() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let setting = AugmentationSetting::new(SynonymSource::WnFirst, Condition::UnigramPlusBigram);
        let out = augment_dataset(&data, &setting, &resources, None).unwrap();

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("augmented.tsv");
        write_dataset(&path, &out.examples).unwrap();
        let back = read_dataset(&path).unwrap();
        assert_eq!(back.len(), out.examples.len());
        for (orig, read) in out.examples.iter().zip(&back) {
            assert_eq!(orig.surface(), read.surface());
            assert_eq!(orig.label, read.label);
            assert_eq!(orig.provenance.is_original(), read.provenance.is_original());
            assert_eq!(orig.provenance.relation(), read.provenance.relation());
        }
    }

    #[test]
    fn read_dataset_rejects_malformed_rows() {
        let f = write_tmp("dog\thouse\n");
        let err = read_dataset(f.path()).unwrap_err();
        assert!(matches!(err, AugmentError::Row { line: 1, .. }));
    }

    #[test]
    fn read_dataset_skips_comments_and_blank_lines() {
        let f = write_tmp("# header\n\ndog\thouse\tL\n");
        let data = read_dataset(f.path()).unwrap();
        assert_eq!(data.len(), 1);
        assert_eq!(data[0].id, "e0");
    }

    #[test]
    fn augmentation_is_deterministic() {
        let lex = toy_synsets();
        let resources = AugmentResources {
            synsets: Some(&lex),
            ..Default::default()
        };
        let data = vec![
            PairExample::original("e0", "dog", "house", "L1"),
            PairExample::original("e1", "house", "dog", "L2"),
        ];
        let setting = AugmentationSetting::new(SynonymSource::WnAll, Condition::UnigramPlusBigram);
        let a = augment_dataset(&data, &setting, &resources, None).unwrap();
        let b = augment_dataset(&data, &setting, &resources, None).unwrap();
        assert_eq!(a.examples, b.examples);
    }

    #[test]
    fn tier_growth_is_monotone() {
        let f = write_tmp(
            "NN\tS\tdog\tcanine\tEQUIV\t0.9\n\
             NN\tM\tdog\thound\tEQUIV\t0.8\n\
             NN\tL\tdog\tpup\tFWD\t0.7\n\
             NN\tXXL\thouse\thome\tEQUIV\t0.9\n",
        );
        let store = load_paraphrases(f.path(), None, LoadMode::Lenient).unwrap();
        let resources = AugmentResources {
            paraphrases: Some(&store),
            ..Default::default()
        };
        let data = vec![PairExample::original("e0", "dog", "house", "L")];
        let mut last = 0;
        for tier in Tier::ALL {
            let out = augment_dataset(
                &data,
                &AugmentationSetting::new(SynonymSource::Ppdb { tier }, Condition::Unigram),
                &resources,
                None,
            )
            .unwrap();
            assert!(out.examples.len() >= last);
            last = out.examples.len();
        }
        assert_eq!(last, 5); // original + canine + hound + pup + home
    }
}
