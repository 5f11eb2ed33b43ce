use std::io::Write;
use std::sync::Arc;

use latimer_core::ideal::{class_monoid_with, MonoidOptions, SearchBudget};
use latimer_core::latimer::{are_conjugate, classify_with, oracle_count_classes};
use latimer_core::quadratic::{growth_report, solve_pell4};
use latimer_core::surface::{
    bound_class_number, bound_max_index, bound_rank, cover_genus, digit_count, lifts_as_loop, traintrack_class,
    verify_genus3, GroupPresentation, Switch, TrainTrack, TwoCover,
};
use latimer_core::{Execution, Order, Verdict};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::json::{compact_matrix, parse_matrix, parse_poly, print_poly, IdealJson, MatrixJson, MonoidJson, TrainTrackJson};
use crate::{Cache, CliError, Command, Config, OutputFormat};

pub struct Report {
    pub text: String,
    pub exit: i32,
}

trait Render: Serialize {
    fn tsv(&self) -> String;
    fn exit(&self) -> i32 {
        0
    }
}

fn render<R: Render>(r: &R, format: OutputFormat) -> Result<Report, CliError> {
    let text = match format {
        OutputFormat::Tsv => r.tsv(),
        OutputFormat::Json => {
            // Through `Value` so that cached and fresh payloads print alike.
            let v = serde_json::to_value(r).map_err(|e| CliError::Io(e.to_string()))?;
            json_text(&v)?
        }
    };
    Ok(Report { text, exit: r.exit() })
}

fn json_text(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn options(config: &Config) -> MonoidOptions {
    MonoidOptions {
        bound: config.bound_override,
        budget: SearchBudget::with_radius(config.search_budget),
        ..MonoidOptions::default()
    }
}

pub fn execute(cmd: &Command, config: &Config, err: &mut dyn Write) -> Result<Report, CliError> {
    let f = config.output_format;
    match cmd {
        Command::Classify { poly, oracle } => {
            let chi = parse_poly(poly)?;
            let oracle = oracle.as_deref().map(parse_pair).transpose()?;
            let oracle_tag = oracle.map_or_else(|| "-".to_string(), |(e, c)| format!("{e},{c}"));
            let m = cached(config, &["classify", &print_poly(&chi), &oracle_tag], err, || {
                let mut inv = classify_with(&chi, &options(config), config.degree_cap)?;
                if let Some((e, c)) = oracle {
                    inv.oracle_count = Some(oracle_count_classes(&chi, e, c)?);
                }
                Ok(MonoidJson::from_inventory(&inv))
            })?;
            render(&m, f)
        }
        Command::Icm { poly } => {
            let chi = parse_poly(poly)?;
            let m = cached(config, &["icm", &print_poly(&chi)], err, || {
                let order = Arc::new(Order::with_degree_cap(chi.clone(), config.degree_cap)?);
                Ok(MonoidJson::from_monoid(&class_monoid_with(order, &options(config))?))
            })?;
            render(&m, f)
        }
        Command::Conjugate { mat_a, mat_b } => {
            let (a, b) = (parse_matrix(mat_a)?, parse_matrix(mat_b)?);
            if a.nrows() > config.degree_cap {
                return Err(CliError::Input(format!("matrix size {} exceeds the degree cap", a.nrows())));
            }
            let v = are_conjugate(&a, &b, &SearchBudget::with_radius(config.search_budget))?;
            let status = match v.status {
                Verdict::Equivalent => "equivalent",
                Verdict::Inequivalent => "inequivalent",
                Verdict::Unknown => "unknown",
            };
            render(&ConjugateReport { status: status.into(), witness: v.witness.as_ref().map(MatrixJson::encode) }, f)
        }
        Command::Pell { d } => {
            let d: BigInt = d.trim().parse().map_err(|_| CliError::Input(format!("not an integer: {d:?}")))?;
            let s = solve_pell4(&d)?;
            render(&PellReport { d: s.d.to_string(), a: s.a.to_string(), b: s.b.to_string() }, f)
        }
        Command::Mw { count } => {
            let rows = growth_report(*count, Execution::default())?
                .into_iter()
                .map(|r| MwRow { d: r.d.to_string(), class_number: r.class_number, mw: format!("{:.6}", r.mw_value) })
                .collect();
            render(&MwReport { rows }, f)
        }
        Command::Bounds { genus } => {
            let g = *genus;
            let exact = bound_class_number(g)?;
            render(
                &BoundsReport {
                    genus: g,
                    max_index: bound_max_index(g)?.to_string(),
                    class_number_bound_digits: digit_count(&exact),
                    class_number_bound: exact.to_string(),
                    rank_bound: bound_rank(g, 1)?.to_string(),
                },
                f,
            )
        }
        Command::VerifyExample => {
            let r = verify_genus3();
            render(
                &Genus3Json {
                    rank: r.rank_m_minus_i,
                    snf_nonzero: r.snf_nonzero,
                    det: r.det_bareiss.to_string(),
                    charpoly: print_poly(&r.charpoly),
                    ok: r.ok(),
                },
                f,
            )
        }
        Command::Cover { genus, hom, word } => {
            let base = if *genus == 2 {
                GroupPresentation::genus2_example()
            } else if *genus >= 1 {
                GroupPresentation::standard_surface(*genus)
            } else {
                return Err(CliError::Input("genus must be at least 1".into()));
            };
            let hom = hom
                .split(',')
                .map(|x| x.trim().parse::<u8>().map_err(|_| CliError::Input(format!("bad hom value {x:?}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let cover = TwoCover::new(base, hom)?;
            let lifts = match word {
                Some(w) => Some(lifts_as_loop(&cover.base.parse_word(w)?.reduced(), &cover)),
                None => None,
            };
            render(
                &CoverReport {
                    base_genus: *genus,
                    generators: cover.base.generators.clone(),
                    hom: cover.hom.clone(),
                    genus: cover_genus(&cover)?,
                    lifts,
                },
                f,
            )
        }
        Command::Ttclass { file } => {
            let text = std::fs::read_to_string(file)?;
            let t: TrainTrackJson =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("train track JSON: {e}")))?;
            let switches = t
                .switches
                .iter()
                .map(|s| Switch { incoming: s.incoming.clone(), outgoing: s.outgoing.clone() })
                .collect();
            let c = traintrack_class(&TrainTrack::new(t.transition.decode()?, switches)?)?;
            render(
                &TtReport {
                    chi: print_poly(&c.chi),
                    weights: c
                        .weights
                        .entries
                        .iter()
                        .map(|e| e.coords.iter().map(ToString::to_string).collect())
                        .collect(),
                    ideal: IdealJson::encode(&c.ideal),
                    stretch_lo: c.stretch.lo.to_string(),
                    stretch_hi: c.stretch.hi.to_string(),
                    stretch: format!("{:.8}", c.stretch.approx()),
                },
                f,
            )
        }
    }
}

fn parse_pair(s: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => match (a.parse(), b.parse()) {
            (Ok(a), Ok(b)) => Ok((a, b)),
            _ => Err(CliError::Input(format!("bad oracle bounds {s:?}"))),
        },
        _ => Err(CliError::Input(format!("expected ENTRY_BOUND,CONJ_BOUND, got {s:?}"))),
    }
}

/// Looks the monoid up in the cache, computing and storing it on a miss.
fn cached<F>(config: &Config, parts: &[&str], err: &mut dyn Write, compute: F) -> Result<MonoidJson, CliError>
where
    F: FnOnce() -> Result<MonoidJson, CliError>,
{
    let Some(dir) = &config.cache_dir else {
        return compute();
    };
    let bound = config.bound_override.map_or_else(|| "default".to_string(), |b| b.to_string());
    let budget = config.search_budget.to_string();
    let cap = config.degree_cap.to_string();
    let mut all: Vec<&str> = parts.to_vec();
    all.extend([bound.as_str(), budget.as_str(), cap.as_str()]);
    let key = crate::cache_key(&all);
    let cache = Cache::new(dir);
    if let Some(v) = cache.get(&key) {
        if let Ok(m) = serde_json::from_value::<MonoidJson>(v) {
            return Ok(m);
        }
    }
    let m = compute()?;
    let v = serde_json::to_value(&m).map_err(|e| CliError::Io(e.to_string()))?;
    if let Err(e) = cache.put(&key, &v) {
        let _ = writeln!(err, "warning: could not write cache: {e}");
    }
    Ok(m)
}

impl Render for MonoidJson {
    fn tsv(&self) -> String {
        let mut s = format!(
            "chi\t{}\ncount\t{}\npicard_size\t{}\nbound\t{}\ncertified\t{}\n",
            self.chi, self.count, self.picard_size, self.bound, self.certified
        );
        if let Some(o) = self.oracle_count {
            s += &format!("oracle_count\t{o}\noracle_match\t{}\n", o == self.count);
        }
        for (i, c) in self.classes.iter().enumerate() {
            let hnf: Vec<String> = c.ideal.hnf.iter().map(|r| r.join(",")).collect();
            s += &format!("class\t{i}\tinvertible={}\tden={}\thnf={}", c.invertible, c.ideal.den, hnf.join(";"));
            if let Some(m) = &c.matrix {
                if let Ok(m) = m.decode() {
                    s += &format!("\tmatrix={}", compact_matrix(&m));
                }
            }
            s.push('\n');
        }
        s
    }

    fn exit(&self) -> i32 {
        let oracle_ok = self.oracle_count.is_none_or(|o| o == self.count);
        if self.certified && oracle_ok {
            0
        } else {
            2
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ConjugateReport {
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<MatrixJson>,
}

impl Render for ConjugateReport {
    fn tsv(&self) -> String {
        let mut s = format!("status\t{}\n", self.status);
        if let Some(Ok(w)) = self.witness.as_ref().map(MatrixJson::decode) {
            s += &format!("witness\t{}\n", compact_matrix(&w));
        }
        s
    }

    fn exit(&self) -> i32 {
        if self.status == "unknown" {
            2
        } else {
            0
        }
    }
}

#[derive(Serialize)]
struct PellReport {
    d: String,
    a: String,
    b: String,
}

impl Render for PellReport {
    fn tsv(&self) -> String {
        format!("a={} b={}\n", self.a, self.b)
    }
}

#[derive(Serialize)]
struct MwRow {
    d: String,
    class_number: usize,
    mw: String,
}

#[derive(Serialize)]
struct MwReport {
    rows: Vec<MwRow>,
}

impl Render for MwReport {
    fn tsv(&self) -> String {
        let mut s = String::from("d\tclass_number\tmw\n");
        for r in &self.rows {
            s += &format!("{}\t{}\t{}\n", r.d, r.class_number, r.mw);
        }
        s
    }
}

#[derive(Serialize)]
struct BoundsReport {
    genus: u64,
    max_index: String,
    class_number_bound: String,
    class_number_bound_digits: usize,
    rank_bound: String,
}

impl Render for BoundsReport {
    fn tsv(&self) -> String {
        format!(
            "genus\t{}\nmax_index\t{}\nclass_number_bound_digits\t{}\nrank_bound\t{}\n",
            self.genus, self.max_index, self.class_number_bound_digits, self.rank_bound
        )
    }
}

#[derive(Serialize)]
struct Genus3Json {
    rank: usize,
    snf_nonzero: usize,
    det: String,
    charpoly: String,
    ok: bool,
}

impl Render for Genus3Json {
    fn tsv(&self) -> String {
        format!("rank(M\u{2212}I6)={} {}\n", self.rank, if self.ok { "OK" } else { "FAIL" })
    }

    fn exit(&self) -> i32 {
        if self.ok {
            0
        } else {
            2
        }
    }
}

#[derive(Serialize)]
struct CoverReport {
    base_genus: usize,
    generators: Vec<String>,
    hom: Vec<u8>,
    genus: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    lifts: Option<bool>,
}

impl Render for CoverReport {
    fn tsv(&self) -> String {
        let mut s = format!("base_genus\t{}\ncover_genus\t{}\n", self.base_genus, self.genus);
        if let Some(l) = self.lifts {
            s += &format!("lifts_as_loop\t{l}\n");
        }
        s
    }
}

#[derive(Serialize)]
struct TtReport {
    chi: String,
    weights: Vec<Vec<String>>,
    ideal: IdealJson,
    stretch_lo: String,
    stretch_hi: String,
    stretch: String,
}

impl Render for TtReport {
    fn tsv(&self) -> String {
        let w: Vec<String> = self.weights.iter().map(|r| r.join(",")).collect();
        let hnf: Vec<String> = self.ideal.hnf.iter().map(|r| r.join(",")).collect();
        format!(
            "chi\t{}\nweights\t{}\nideal\tden={}\thnf={}\nstretch\t{}\nstretch_interval\t{}\t{}\n",
            self.chi,
            w.join(";"),
            self.ideal.den,
            hnf.join(";"),
            self.stretch,
            self.stretch_lo,
            self.stretch_hi
        )
    }
}
