//! Lexical resources: tiered paraphrase tables and synset lexicons.
//!
//! Both resources are consumed from normalized UTF-8 TSV files rather than
//! the original distribution formats (see the README for the conversion
//! recipe). Lookups are exact matches on lowercased token sequences; no
//! lemmatization is performed.
//!
//! Paraphrase file, one row per line:
//!
//! ```text
//! pos<TAB>tier<TAB>source<TAB>target<TAB>relation<TAB>score
//! ```
//!
//! with `tier` one of `S M L XL XXL XXXL`, `relation` one of
//! `EQUIV FWD REV OPP INDEP OTHER NONE`, multiword phrases separated by
//! single ASCII spaces, and `#` starting a comment line.
//!
//! Synset file, one sense per line:
//!
//! ```text
//! lemma<TAB>sense_rank<TAB>synset_id
//! ```

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Paraphrase-table size, from highest precision (`S`) to highest recall
/// (`XXXL`). The sizes are nested: every entry present at one tier is
/// also visible when querying any larger tier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tier {
    S,
    M,
    L,
    Xl,
    Xxl,
    Xxxl,
}

impl Tier {
    pub const ALL: [Tier; 6] = [Tier::S, Tier::M, Tier::L, Tier::Xl, Tier::Xxl, Tier::Xxxl];

    pub fn parse(label: &str) -> Option<Tier> {
        match label {
            "S" => Some(Tier::S),
            "M" => Some(Tier::M),
            "L" => Some(Tier::L),
            "XL" => Some(Tier::Xl),
            "XXL" => Some(Tier::Xxl),
            "XXXL" => Some(Tier::Xxxl),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Tier::S => "S",
            Tier::M => "M",
            Tier::L => "L",
            Tier::Xl => "XL",
            Tier::Xxl => "XXL",
            Tier::Xxxl => "XXXL",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Semantic relation between a paraphrase pair (PPDB 2.0 inventory).
/// `None` marks the absence of an annotation, e.g. for synset-derived
/// replacements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    Equivalence,
    ForwardEntailment,
    ReverseEntailment,
    Opposite,
    Independent,
    OtherRelated,
    None,
}

impl Relation {
    pub fn parse(label: &str) -> Option<Relation> {
        match label {
            "EQUIV" => Some(Relation::Equivalence),
            "FWD" => Some(Relation::ForwardEntailment),
            "REV" => Some(Relation::ReverseEntailment),
            "OPP" => Some(Relation::Opposite),
            "INDEP" => Some(Relation::Independent),
            "OTHER" => Some(Relation::OtherRelated),
            "NONE" => Some(Relation::None),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Relation::Equivalence => "EQUIV",
            Relation::ForwardEntailment => "FWD",
            Relation::ReverseEntailment => "REV",
            Relation::Opposite => "OPP",
            Relation::Independent => "INDEP",
            Relation::OtherRelated => "OTHER",
            Relation::None => "NONE",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One paraphrase row: `source` may be replaced by `target`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParaphraseEntry {
    pub pos: String,
    pub tier: Tier,
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub relation: Relation,
    pub score: f64,
}

/// How loaders react to malformed rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LoadMode {
    /// Skip malformed rows, counting them (the default).
    #[default]
    Lenient,
    /// Abort on the first malformed row, reporting its line number.
    FailFast,
}

#[derive(Debug, Error)]
pub enum LexiconError {
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
    #[error("{path}:{line}: duplicate sense rank {rank} for lemma \"{lemma}\"")]
    DuplicateSense {
        path: PathBuf,
        line: usize,
        lemma: String,
        rank: u32,
    },
}

/// Paraphrase table indexed by lowercased source phrase, with cumulative
/// tier semantics: querying at tier `T` returns every entry at tier `T`
/// or smaller.
#[derive(Debug, Clone, Default)]
pub struct ParaphraseStore {
    by_source: HashMap<Vec<String>, Vec<ParaphraseEntry>>,
    pos_filter: Option<String>,
    len: usize,
    skipped: usize,
}

impl ParaphraseStore {
    /// Number of stored entries.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Malformed rows skipped during a lenient load.
    pub fn skipped_rows(&self) -> usize {
        self.skipped
    }

    pub fn pos_filter(&self) -> Option<&str> {
        self.pos_filter.as_deref()
    }

    /// All entries, in unspecified order.
    pub fn entries(&self) -> impl Iterator<Item = &ParaphraseEntry> {
        self.by_source.values().flatten()
    }

    fn insert(&mut self, entry: ParaphraseEntry) {
        self.by_source
            .entry(entry.source.clone())
            .or_default()
            .push(entry);
        self.len += 1;
    }

    fn sort_entries(&mut self) {
        for entries in self.by_source.values_mut() {
            entries.sort_by(|a, b| {
                a.tier
                    .cmp(&b.tier)
                    .then_with(|| b.score.total_cmp(&a.score))
                    .then_with(|| a.target.cmp(&b.target))
            });
        }
    }
}

fn split_phrase(field: &str) -> Result<Vec<String>, String> {
    let tokens: Vec<String> = field.split(' ').map(|t| t.to_lowercase()).collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(format!("empty token in phrase \"{field}\""));
    }
    if tokens.is_empty() || tokens.len() > 2 {
        return Err(format!(
            "phrase \"{field}\" has {} tokens, expected 1 or 2",
            tokens.len()
        ));
    }
    Ok(tokens)
}

fn parse_paraphrase_row(line: &str) -> Result<ParaphraseEntry, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 6 {
        return Err(format!("expected 6 tab-separated fields, got {}", fields.len()));
    }
    let tier = Tier::parse(fields[1]).ok_or_else(|| format!("unknown tier label \"{}\"", fields[1]))?;
    let source = split_phrase(fields[2])?;
    let target = split_phrase(fields[3])?;
    if source == target {
        return Err("source equals target".to_string());
    }
    let relation = Relation::parse(fields[4])
        .ok_or_else(|| format!("unknown relation label \"{}\"", fields[4]))?;
    let score: f64 = fields[5]
        .parse()
        .map_err(|_| format!("bad score \"{}\"", fields[5]))?;
    if !score.is_finite() || score < 0.0 {
        return Err(format!("score {score} is not a finite non-negative number"));
    }
    Ok(ParaphraseEntry {
        pos: fields[0].to_string(),
        tier,
        source,
        target,
        relation,
        score,
    })
}

/// Load a paraphrase table, optionally keeping only rows with the given
/// POS tag. In [`LoadMode::Lenient`] malformed rows are skipped and
/// counted; in [`LoadMode::FailFast`] the first malformed row aborts the
/// load with its line number.
pub fn load_paraphrases(
    path: &Path,
    pos_filter: Option<&str>,
    mode: LoadMode,
) -> Result<ParaphraseStore, LexiconError> {
    let file = File::open(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reader = BufReader::new(file);
    let mut store = ParaphraseStore {
        pos_filter: pos_filter.map(str::to_string),
        ..ParaphraseStore::default()
    };
    for (line_no, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| LexiconError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        match parse_paraphrase_row(&line) {
            Ok(entry) => {
                if pos_filter.is_none_or(|pos| entry.pos == pos) {
                    store.insert(entry);
                }
            }
            Err(reason) => match mode {
                LoadMode::Lenient => store.skipped += 1,
                LoadMode::FailFast => {
                    return Err(LexiconError::Row {
                        path: path.to_path_buf(),
                        line: line_no + 1,
                        reason,
                    })
                }
            },
        }
    }
    store.sort_entries();
    Ok(store)
}

/// All paraphrases of `phrase` visible at `tier`, in deterministic
/// order: tier ascending, then score descending, then target
/// lexicographic. Unknown phrases yield an empty list.
pub fn query_paraphrases(
    store: &ParaphraseStore,
    phrase: &[String],
    tier: Tier,
) -> Vec<ParaphraseEntry> {
    let key: Vec<String> = phrase.iter().map(|t| t.to_lowercase()).collect();
    match store.by_source.get(&key) {
        Some(entries) => entries.iter().filter(|e| e.tier <= tier).cloned().collect(),
        None => Vec::new(),
    }
}

/// Synset lexicon: lemma-to-ordered-senses and synset-to-lemma-set maps.
#[derive(Debug, Clone, Default)]
pub struct SynsetLexicon {
    /// lemma -> (sense_rank, synset_id), sorted by rank ascending.
    lemma_to_senses: HashMap<String, Vec<(u32, String)>>,
    synset_to_lemmas: HashMap<String, BTreeSet<String>>,
    skipped: usize,
}

impl SynsetLexicon {
    pub fn is_empty(&self) -> bool {
        self.lemma_to_senses.is_empty()
    }

    /// Number of distinct lemmas.
    pub fn lemma_count(&self) -> usize {
        self.lemma_to_senses.len()
    }

    pub fn skipped_rows(&self) -> usize {
        self.skipped
    }

    /// Synset ids of `lemma`, most frequent sense first.
    pub fn senses(&self, lemma: &str) -> Vec<&str> {
        self.lemma_to_senses
            .get(&lemma.to_lowercase())
            .map(|senses| senses.iter().map(|(_, id)| id.as_str()).collect())
            .unwrap_or_default()
    }

    /// Lemmas of the given synset.
    pub fn synset_lemmas(&self, synset_id: &str) -> Option<&BTreeSet<String>> {
        self.synset_to_lemmas.get(synset_id)
    }
}

/// Load a synset lexicon. Malformed rows are skipped and counted;
/// a duplicate (lemma, sense_rank) pair is always an error.
pub fn load_synsets(path: &Path) -> Result<SynsetLexicon, LexiconError> {
    let file = File::open(path).map_err(|source| LexiconError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let reader = BufReader::new(file);
    let mut lexicon = SynsetLexicon::default();
    for (line_no, line) in reader.lines().enumerate() {
        let line = line.map_err(|source| LexiconError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 3 || fields[0].is_empty() || fields[2].is_empty() {
            lexicon.skipped += 1;
            continue;
        }
        let Ok(rank) = fields[1].parse::<u32>() else {
            lexicon.skipped += 1;
            continue;
        };
        if rank == 0 {
            lexicon.skipped += 1;
            continue;
        }
        let lemma = fields[0].to_lowercase();
        let synset_id = fields[2].to_string();
        let senses = lexicon.lemma_to_senses.entry(lemma.clone()).or_default();
        if senses.iter().any(|(r, _)| *r == rank) {
            return Err(LexiconError::DuplicateSense {
                path: path.to_path_buf(),
                line: line_no + 1,
                lemma,
                rank,
            });
        }
        senses.push((rank, synset_id.clone()));
        lexicon
            .synset_to_lemmas
            .entry(synset_id)
            .or_default()
            .insert(lemma);
    }
    for senses in lexicon.lemma_to_senses.values_mut() {
        senses.sort_by_key(|(rank, _)| *rank);
    }
    Ok(lexicon)
}

/// Lemmas of the most frequent sense of `word`, including `word` itself.
/// Unknown words yield the empty set.
pub fn synonyms_first(lexicon: &SynsetLexicon, word: &str) -> BTreeSet<String> {
    let key = word.to_lowercase();
    let Some(senses) = lexicon.lemma_to_senses.get(&key) else {
        return BTreeSet::new();
    };
    match senses.first() {
        Some((_, synset_id)) => lexicon.synset_to_lemmas[synset_id].clone(),
        None => BTreeSet::new(),
    }
}

/// Lemmas of every sense of `word`, including `word` itself.
pub fn synonyms_all(lexicon: &SynsetLexicon, word: &str) -> BTreeSet<String> {
    let key = word.to_lowercase();
    let Some(senses) = lexicon.lemma_to_senses.get(&key) else {
        return BTreeSet::new();
    };
    let mut lemmas = BTreeSet::new();
    for (_, synset_id) in senses {
        lemmas.extend(lexicon.synset_to_lemmas[synset_id].iter().cloned());
    }
    lemmas
}
