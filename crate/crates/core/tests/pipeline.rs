//! The table-producing commands end to end.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::{Path, PathBuf};

use ddm::baselines::d_max_exact;
use ddm::extremal::ExtremalOptions;
use ddm::pipeline::{
    cmd_analyze, cmd_extremal, cmd_oracle, cmd_rank, cmd_significance, cmd_trend, InputFormat, RunConfig,
};
use ddm::treebank::synthetic::{synthetic_corpus, OrderMix};
use ddm::treebank::{write_corpus, Dataset, Sentence};
use ddm::{FreeTree, LinearArrangement};

type Rows = Vec<BTreeMap<String, String>>;

fn read_table(path: &Path) -> Rows {
    let text = std::fs::read_to_string(path).unwrap();
    assert!(text.starts_with("# ddm "), "{} lacks a schema line", path.display());
    let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
    let header = r.headers().unwrap().clone();
    r.records()
        .map(|rec| header.iter().zip(rec.unwrap().iter()).map(|(h, v)| (h.to_string(), v.to_string())).collect())
        .collect()
}

fn num(row: &BTreeMap<String, String>, key: &str) -> f64 {
    row[key].parse().unwrap_or_else(|_| panic!("{key} = {:?}", row[key]))
}

fn write(dir: &Path, name: &str, sentences: &[Sentence]) -> PathBuf {
    let path = dir.join(name);
    write_corpus(File::create(&path).unwrap(), sentences).unwrap();
    path
}

fn config(inputs: Vec<PathBuf>, out: &Path) -> RunConfig {
    RunConfig {
        inputs,
        format: InputFormat::Internal,
        replicates: 2_000,
        out: out.to_path_buf(),
        ..RunConfig::default()
    }
}

fn sentence(language: &str, id: usize, tree: FreeTree) -> Sentence {
    Sentence { language: language.into(), doc_id: "d".into(), sent_id: id.to_string(), tree }
}

/// `tree` relabelled so that the identity order is `order`.
fn arranged(tree: &FreeTree, order: &[usize]) -> FreeTree {
    tree.relabel(LinearArrangement::from_order(order).unwrap().positions()).with_root(Some(0)).unwrap()
}

#[test]
fn optimal_corpus_scores_one_hundred() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "opt.csv", &synthetic_corpus("Czech", OrderMix::optimal(1.0), 200, 1..=20, 3));
    cmd_analyze(&config(vec![input], dir.path())).unwrap();
    let rows = read_table(&dir.path().join("languages.csv"));
    assert_eq!(num(&rows[0], "percentage"), 100.0);
    assert_eq!(num(&rows[0], "omega"), 1.0);
    assert_eq!(num(&rows[0], "delta"), 0.0);
    let sentences = read_table(&dir.path().join("sentences.csv"));
    assert_eq!(sentences.len(), 200);
    assert!(sentences.iter().all(|r| r["n"].parse::<usize>().unwrap() >= 3 || r["omega"].is_empty()));
}

#[test]
fn shuffled_corpus_scores_near_zero() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "rnd.csv", &synthetic_corpus("Czech", OrderMix::random(), 3_000, 3..=25, 4));
    cmd_analyze(&config(vec![input], dir.path())).unwrap();
    let rows = read_table(&dir.path().join("languages.csv"));
    assert!(num(&rows[0], "percentage").abs() < 3.0, "{}", rows[0]["percentage"]);
}

#[test]
fn family_rollup_is_the_mean_over_languages() {
    let dir = tempfile::tempdir().unwrap();
    let fixture = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/synthetic.csv"));
    let extra = write(dir.path(), "extra.csv", &synthetic_corpus("German", OrderMix::optimal(0.3), 100, 3..=12, 5));
    cmd_analyze(&config(vec![fixture, extra], dir.path())).unwrap();
    let languages = read_table(&dir.path().join("languages.csv"));
    let mut by_family: BTreeMap<String, Vec<f64>> = BTreeMap::new();
    for r in &languages {
        by_family.entry(r["family"].clone()).or_default().push(num(r, "omega"));
    }
    let families = read_table(&dir.path().join("families.csv"));
    assert_eq!(families.len(), by_family.len());
    for f in &families {
        let values = &by_family[&f["family"]];
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        assert_eq!(num(f, "languages") as usize, values.len());
        assert!((num(f, "mean") - mean).abs() < 1e-12);
    }
    assert_eq!(by_family["Indo-European"].len(), 3);
    // the spread table recounted from the per-sentence scores
    let sentences = read_table(&dir.path().join("sentences.csv"));
    let spread = read_table(&dir.path().join("scores.csv"));
    assert_eq!(spread.len(), 8 * languages.len());
    for r in spread.iter().filter(|r| r["score"] == "omega" || r["score"] == "d") {
        let mut values: Vec<f64> = sentences
            .iter()
            .filter(|s| s["language"] == r["language"] && !s["omega"].is_empty())
            .map(|s| num(s, &r["score"]))
            .collect();
        values.sort_by(f64::total_cmp);
        let k = values.len();
        assert_eq!(num(r, "count") as usize, k);
        assert_eq!((num(r, "min"), num(r, "max")), (values[0], values[k - 1]));
        let median = if k % 2 == 1 { values[k / 2] } else { (values[k / 2 - 1] + values[k / 2]) / 2.0 };
        assert_eq!(num(r, "median"), median);
        let language = languages.iter().find(|l| l["language"] == r["language"]).unwrap();
        assert!((num(r, "mean") - num(language, &r["score"])).abs() < 1e-12);
    }
    let lengths = read_table(&dir.path().join("lengths.csv"));
    assert!(lengths.iter().all(|r| (3..=50).contains(&r["n"].parse::<usize>().unwrap())));
}

#[test]
fn worst_short_sentences_are_significantly_small() {
    let dir = tempfile::tempdir().unwrap();
    let mut worst = Vec::new();
    for i in 0..60 {
        let t = if i % 2 == 0 { FreeTree::star(3) } else { FreeTree::path(4) };
        let (_, order) = d_max_exact(&t, &Default::default()).unwrap();
        worst.push(sentence("Basque", i, arranged(&t, &order.order())));
    }
    let good = synthetic_corpus("Czech", OrderMix::optimal(1.0), 60, 3..=4, 6);
    let inputs = vec![write(dir.path(), "worst.csv", &worst), write(dir.path(), "good.csv", &good)];
    let summary = cmd_significance(&config(inputs, dir.path())).unwrap();
    assert_eq!(summary.large.languages, 2);
    assert_eq!(summary.exceptions, vec!["Basque".to_string()]);
    let small = read_table(&dir.path().join("small_lengths.csv"));
    for r in &small {
        assert_eq!(r["significant"] == "true", r["language"] == "Basque", "{r:?}");
    }
    assert_eq!(summary.small.iter().map(|(n, c)| (*n, c.significant)).collect::<Vec<_>>(), vec![(3, 1), (4, 1)]);
    let sig = read_table(&dir.path().join("significance.csv"));
    let czech = sig.iter().find(|r| r["language"] == "Czech").unwrap();
    // zero exceedances, replaced and corrected over two languages
    assert_eq!(num(czech, "p_adjusted"), 2.0 * (1.0 - 0.01) / 2_000.0);
    assert_eq!(czech["magnitude"], "3.0");
}

#[test]
fn monotone_fixtures_give_unit_tau() {
    let dir = tempfile::tempdir().unwrap();
    let mut rising = Vec::new();
    let mut falling = Vec::new();
    for n in 3..=10 {
        // a path one unit above its minimum: Omega = 1 - 3 / ((n - 1)(n - 2))
        let mut order: Vec<usize> = (0..n).collect();
        order.swap(0, 1);
        rising.push(sentence("Rising", n, arranged(&FreeTree::path(n), &order)));
        if n % 2 == 0 {
            // a star with its hub first: Omega falls through -1, -5/4, -7/5, -3/2
            falling.push(sentence("Falling", n, FreeTree::star(n).with_root(Some(0)).unwrap()));
        }
    }
    let inputs = vec![write(dir.path(), "up.csv", &rising), write(dir.path(), "down.csv", &falling)];
    cmd_trend(&config(inputs, dir.path())).unwrap();
    let rows = read_table(&dir.path().join("trend.csv"));
    let get =
        |language: &str, score: &str| rows.iter().find(|r| r["language"] == language && r["score"] == score).unwrap();
    assert_eq!(num(get("Rising", "omega"), "tau"), 1.0);
    assert_eq!(num(get("Falling", "omega"), "tau"), -1.0);
    assert_eq!(num(get("Rising", "d"), "tau"), 1.0);
    assert_eq!(get("Rising", "omega")["increasing"], "true");
    assert_eq!(get("Falling", "omega")["decreasing"], "false", "4 strata cannot reach 0.05 after correction");
    assert_eq!(num(get("Falling", "omega"), "p_decreasing"), 1.0 / 24.0);
}

#[test]
fn separable_languages_form_a_chain() {
    let dir = tempfile::tempdir().unwrap();
    let inputs: Vec<PathBuf> = [("High", 1.0), ("Mid", 0.5), ("Low", 0.0)]
        .iter()
        .map(|&(name, share)| {
            write(dir.path(), &format!("{name}.csv"), &synthetic_corpus(name, OrderMix::optimal(share), 300, 3..=12, 8))
        })
        .collect();
    let out = dir.path().join("out");
    let summary = cmd_rank(&config(inputs, &out)).unwrap();
    let names = &summary.result.languages;
    let arc =
        |a: &str, b: &str| (names.iter().position(|x| x == a).unwrap(), names.iter().position(|x| x == b).unwrap());
    let mut chain = vec![arc("High", "Mid"), arc("Mid", "Low")];
    chain.sort();
    assert_eq!(summary.result.reduced, chain);
    assert_eq!(summary.result.arcs.len(), 3);
    let dot = std::fs::read_to_string(out.join("hasse.dot")).unwrap();
    assert!(
        dot.contains("\"High\" -> \"Mid\";")
            && dot.contains("\"Mid\" -> \"Low\";")
            && !dot.contains("\"High\" -> \"Low\";")
    );
    let ranking = read_table(&out.join("ranking.csv"));
    assert_eq!(ranking.iter().map(|r| r["language"].as_str()).collect::<Vec<_>>(), ["High", "Mid", "Low"]);
    let counts = read_table(&out.join("rank_summary.csv"));
    assert_eq!((counts[0]["arcs"].as_str(), counts[0]["hasse_arcs"].as_str()), ("3", "2"));
}

#[test]
fn identical_languages_have_no_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let base = synthetic_corpus("A", OrderMix::optimal(0.4), 150, 3..=10, 9);
    let copy: Vec<Sentence> = base.iter().cloned().map(|s| Sentence { language: "B".into(), ..s }).collect();
    let inputs = vec![write(dir.path(), "a.csv", &base), write(dir.path(), "b.csv", &copy)];
    let summary = cmd_rank(&config(inputs, dir.path())).unwrap();
    assert!(summary.result.arcs.is_empty() && summary.uncorrected.arcs.is_empty());
    assert!(summary.result.pairs[0].p_raw > 0.4, "{}", summary.result.pairs[0].p_raw);
    let dot = std::fs::read_to_string(dir.path().join("hasse.dot")).unwrap();
    assert!(!dot.contains("->"));
}

#[test]
fn parallel_datasets_are_reparallelized() {
    let dir = tempfile::tempdir().unwrap();
    let a = synthetic_corpus("English", OrderMix::random(), 40, 1..=8, 10);
    let b: Vec<Sentence> = synthetic_corpus("German", OrderMix::random(), 40, 1..=8, 10).into_iter().skip(5).collect();
    let inputs = vec![write(dir.path(), "a.csv", &a), write(dir.path(), "b.csv", &b)];
    let config = RunConfig { dataset: Dataset::Pud, ..config(inputs, dir.path()) };
    cmd_analyze(&config).unwrap();
    let rows = read_table(&dir.path().join("languages.csv"));
    assert_eq!(rows[0]["count"], rows[1]["count"]);
    assert_eq!(rows[0]["dataset"], "PUD");
    // size statistics describe the corpora before alignment
    assert_eq!(rows[0]["sentences"], "40");
    assert_eq!(rows[1]["sentences"], "35");
    let sentences = read_table(&dir.path().join("sentences.csv"));
    let ids = |lang: &str| {
        sentences.iter().filter(|r| r["language"] == lang).map(|r| r["sent_id"].clone()).collect::<Vec<_>>()
    };
    assert_eq!(ids("English"), ids("German"));
}

#[test]
fn conllu_input_and_language_from_file_name() {
    let dir = tempfile::tempdir().unwrap();
    let sample = PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/English_sample.conllu"));
    let config = RunConfig { format: InputFormat::Conllu, ..config(vec![sample], dir.path()) };
    let summary = cmd_analyze(&config).unwrap();
    assert_eq!(summary.languages.len(), 1);
    assert_eq!(summary.languages[0].0, "English");
    let rows = read_table(&dir.path().join("languages.csv"));
    assert_eq!(
        (rows[0]["sentences"].as_str(), rows[0]["one_word"].as_str(), rows[0]["count"].as_str()),
        ("3", "1", "2")
    );
    assert_eq!(rows[0]["family"], "Indo-European");
}

#[test]
fn extremal_and_oracle_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let path = cmd_extremal(3, 9, true, &ExtremalOptions::default(), dir.path()).unwrap();
    let rows = read_table(&path);
    assert_eq!(rows.len(), 7);
    assert_eq!((rows[0]["alpha"].as_str(), rows[0]["z1"].as_str()), ("-1/2", "-1/2"));
    for r in &rows {
        assert!(num(r, "alpha_f64") <= 0.0 && num(r, "z1_f64") <= num(r, "alpha_f64"));
        assert!(num(r, "alpha_f64") <= num(r, "alpha_bistar_f64"));
        assert_eq!(r["bistar_attains"], "true");
    }
    let far = cmd_extremal(24, 24, false, &ExtremalOptions::default(), dir.path()).unwrap();
    let rows = read_table(&far);
    assert_eq!((rows[0]["alpha_bistar"].as_str(), rows[0]["bistar_k1"].as_str()), ("-613/323", "13"));
    let err = cmd_extremal(3, 20, true, &ExtremalOptions::default(), dir.path()).unwrap_err();
    assert_eq!(err.exit_code(), 4);

    let path = cmd_oracle(1, 6, dir.path()).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let counts: Vec<usize> =
        doc["sizes"].as_array().unwrap().iter().map(|s| s["trees"].as_array().unwrap().len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6]);
    assert_eq!(doc["sizes"][3]["trees"][0]["mean"], "5");
    assert_eq!(cmd_oracle(1, 11, dir.path()).unwrap_err().exit_code(), 4);
}

#[test]
fn errors_map_to_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = RunConfig { replicates: 0, ..config(vec![], dir.path()) };
    assert_eq!(cmd_analyze(&bad).unwrap_err().exit_code(), 3);
    let missing = config(vec![dir.path().join("nope.csv")], dir.path());
    assert_eq!(cmd_analyze(&missing).unwrap_err().exit_code(), 2);
    let garbage = dir.path().join("garbage.csv");
    std::fs::write(&garbage, "not a corpus\n").unwrap();
    assert_eq!(cmd_analyze(&config(vec![garbage], dir.path())).unwrap_err().exit_code(), 2);
}
