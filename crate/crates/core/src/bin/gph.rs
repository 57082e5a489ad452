//! Command-line toolkit over the graph-homotopy library: generators,
//! cover checks, walk and homotopy lifting, universal covers, deck groups,
//! quotients and cover enumeration.
//!
//! Exit codes: 0 success, 1 negative verdict (not a cover, not homotopic,
//! not stabilized), 2 usage or parse errors.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use graph_homotopy::deck::{self, EnumerationOutcome, FundamentalGroup};
use graph_homotopy::error::Error;
use graph_homotopy::families::FamilySpec;
use graph_homotopy::graph::Graph;
use graph_homotopy::morphism::{self, HomVerdict, Morphism};
use graph_homotopy::universal::{build_folded_cover, LiftVerdict};
use graph_homotopy::walk::{OracleBounds, OracleVerdict, Walk};
use graph_homotopy::{covering, universal};

#[derive(Parser)]
#[command(name = "gph", version, about = "homotopy covers of finite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph family.
    Gen {
        /// path | looped-path | cycle | complete | complete-bipartite |
        /// wheel | kneser | paper-g | paper-g-tilde
        family: String,
        /// Integer parameters of the family.
        params: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Order, size, diamonds and stiffness of a graph.
    Info {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Fold a graph down to its stiff pleat.
    Pleat {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Also write the composite retraction as a morphism file.
        #[arg(long)]
        retraction: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Verify the covering and homotopy-covering conditions of a morphism.
    CheckCover {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Lift a walk through a covering map.
    LiftWalk {
        #[arg(long)]
        map: PathBuf,
        /// Whitespace-separated vertex tokens, e.g. "a b c".
        #[arg(long)]
        walk: String,
        #[arg(long)]
        start: String,
        #[arg(long)]
        json: bool,
    },
    /// Lift a homotopy chain through a homotopy cover.
    LiftHomotopy {
        #[arg(long)]
        map: PathBuf,
        /// Chain file: dom/cod graph references, then one `map` section per
        /// chain entry.
        #[arg(long)]
        chain: PathBuf,
        /// Morphism file lifting the first chain entry.
        #[arg(long)]
        start_lift: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide homotopy rel endpoints of two walks by lifting, or with the
    /// bounded rewriting oracle.
    HomotopicWalks {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        walk1: String,
        #[arg(long)]
        walk2: String,
        /// Extra depth margin for the lifting decider.
        #[arg(long, default_value_t = 2)]
        slack: usize,
        /// Use the breadth-first rewriting oracle instead of lifting.
        #[arg(long)]
        oracle: bool,
        /// Walk-length bound for the oracle (default: len1+len2+4).
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide homotopy of two morphisms by spider-move search.
    HomotopicMaps {
        /// Morphism file for the starting map.
        #[arg(long)]
        first: PathBuf,
        /// Morphism file for the target map.
        #[arg(long)]
        second: PathBuf,
        #[arg(long, default_value_t = 1_000_000)]
        max_states: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build the truncated universal homotopy cover.
    UniversalCover {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short = 'v', long)]
        basepoint: String,
        #[arg(long)]
        depth: usize,
        /// Write the class graph in DOT format, classes labeled by
        /// representative walks.
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Identify the fundamental group via the deck group of the universal
    /// cover.
    FundamentalGroup {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short = 'v', long)]
        basepoint: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Deck-transformation group of a stabilized universal cover.
    DeckGroup {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short = 'v', long)]
        basepoint: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate connected homotopy covers up to a maximum degree.
    EnumerateCovers {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short = 'v', long)]
        basepoint: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 4)]
        max_index: usize,
        /// Write one graph file and one morphism file per cover.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Quotient the universal cover by a subgroup of deck transformations.
    Quotient {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short = 'v', long)]
        basepoint: String,
        /// Loop walk at the basepoint generating the subgroup (repeatable).
        #[arg(long)]
        generator: Vec<String>,
        /// Raise each generator to this power first.
        #[arg(long, default_value_t = 1)]
        power: usize,
        /// Quotient by the full deck group.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Export a graph in DOT format.
    ExportDot {
        #[arg(short, long)]
        graph: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::NotACover
                | Error::NotAHomotopyCover
                | Error::NotStabilized(_)
                | Error::QuotientNotVerified(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn load_graph_arg(path: &Option<PathBuf>) -> Result<Arc<Graph>, Error> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p)?,
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(Arc::new(Graph::parse(&text)?))
}

fn emit(text: String, output: &Option<PathBuf>) -> Result<(), Error> {
    match output {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn print_json(v: Value) {
    println!("{}", serde_json::to_string_pretty(&v).expect("serializable"));
}

fn diamonds_json(g: &Graph) -> Value {
    Value::Array(
        g.diamonds()
            .iter()
            .map(|d| Value::Array(d.tokens(g).iter().map(|t| Value::String(t.clone())).collect()))
            .collect(),
    )
}

fn morphism_json(f: &Morphism) -> Value {
    let mut obj = serde_json::Map::new();
    for v in f.dom().vertices() {
        obj.insert(
            f.dom().token(v).to_string(),
            Value::String(f.cod().token(f.apply(v)).to_string()),
        );
    }
    Value::Object(obj)
}

/// Parses a chain file: `dom`/`cod` graph references resolved relative to
/// the file, then one `map` section of `m` lines per chain entry.
fn load_chain(path: &Path) -> Result<Vec<Morphism>, Error> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or_else(|| Path::new("."));
    let mut dom: Option<Arc<Graph>> = None;
    let mut cod: Option<Arc<Graph>> = None;
    let mut sections: Vec<Vec<(String, String)>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut parts = line.split_whitespace();
        let Some(head) = parts.next() else { continue };
        let rest: Vec<&str> = parts.collect();
        match head {
            "dom" | "cod" => {
                let [f] = rest.as_slice() else {
                    return Err(Error::Parse { line: lineno + 1, msg: format!("expected: {head} <file>") });
                };
                let g = Arc::new(Graph::parse(&std::fs::read_to_string(dir.join(f))?)?);
                if head == "dom" {
                    dom = Some(g);
                } else {
                    cod = Some(g);
                }
            }
            "map" => sections.push(Vec::new()),
            "m" => {
                let [a, b] = rest.as_slice() else {
                    return Err(Error::Parse { line: lineno + 1, msg: "expected: m <dom> <cod>".into() });
                };
                let Some(last) = sections.last_mut() else {
                    return Err(Error::Parse { line: lineno + 1, msg: "m line before any map section".into() });
                };
                last.push((a.to_string(), b.to_string()));
            }
            other => {
                return Err(Error::Parse { line: lineno + 1, msg: format!("unknown directive {other}") })
            }
        }
    }
    let dom = dom.ok_or(Error::Parse { line: 0, msg: "missing dom line".into() })?;
    let cod = cod.ok_or(Error::Parse { line: 0, msg: "missing cod line".into() })?;
    sections
        .into_iter()
        .map(|pairs| Morphism::from_pairs(dom.clone(), cod.clone(), &pairs))
        .collect()
}

fn run(cmd: Command) -> Result<ExitCode, Error> {
    match cmd {
        Command::Gen { family, params, output } => {
            let spec = FamilySpec::parse(&family, &params)?;
            let g = graph_homotopy::generate(&spec)?;
            emit(g.to_file_string(), &output)?;
            Ok(ExitCode::SUCCESS)
        }

        Command::Info { graph, json } => {
            let g = load_graph_arg(&graph)?;
            let stiff = morphism::find_fold(&g).is_none();
            let diamonds = g.diamonds();
            if json {
                print_json(json!({
                    "report": "info",
                    "name": g.name(),
                    "order": g.order(),
                    "size": g.size(),
                    "stiff": stiff,
                    "diamonds": diamonds_json(&g),
                }));
            } else {
                println!("graph {}: {} vertices, {} edges", g.name(), g.order(), g.size());
                println!("stiff: {}", if stiff { "yes" } else { "no" });
                println!("diamonds: {}", diamonds.len());
                for d in &diamonds {
                    let [w, x, y, z] = d.tokens(&g);
                    println!("  {w} {x} {y} {z}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::Pleat { graph, output, retraction, json } => {
            let g = load_graph_arg(&graph)?;
            let (p, r) = morphism::pleat(&g)?;
            if let Some(path) = &retraction {
                let dom_name = graph
                    .as_ref()
                    .map(|p| p.display().to_string())
                    .unwrap_or_else(|| "input.graph".into());
                let cod_name = output
                    .as_ref()
                    .map(|p| p.display().to_string())
                    .unwrap_or_else(|| "pleat.graph".into());
                std::fs::write(path, r.to_file_string(&dom_name, &cod_name))?;
            }
            if json {
                print_json(json!({
                    "report": "pleat",
                    "original": {"name": g.name(), "order": g.order(), "size": g.size()},
                    "pleat": {"name": p.name(), "order": p.order(), "size": p.size()},
                    "retraction": morphism_json(&r),
                }));
            } else {
                emit(p.to_file_string(), &output)?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::CheckCover { map, json } => {
            let f = morphism::load_morphism(&map)?;
            let report = covering::check_cover(&f);
            if json {
                let nf: Vec<Value> = report
                    .neighborhood_failures
                    .iter()
                    .map(|(v, d)| {
                        json!({
                            "vertex": f.dom().token(*v),
                            "defect": format!("{d:?}"),
                        })
                    })
                    .collect();
                print_json(json!({
                    "report": "check-cover",
                    "is_surjective": report.is_surjective,
                    "is_cover": report.is_cover,
                    "is_homotopy_cover": report.is_homotopy_cover,
                    "neighborhood_failures": nf,
                    "diamond_failures": Value::Array(report.diamond_failures.iter().map(|d| {
                        Value::Array(d.tokens(f.cod()).iter().map(|t| Value::String(t.clone())).collect())
                    }).collect()),
                }));
            } else {
                println!("surjective: {}", report.is_surjective);
                println!("cover: {}", report.is_cover);
                println!("homotopy cover: {}", report.is_homotopy_cover);
                for (v, d) in &report.neighborhood_failures {
                    println!("  neighborhood defect at {}: {:?}", f.dom().token(*v), d);
                }
                for d in &report.diamond_failures {
                    let [w, x, y, z] = d.tokens(f.cod());
                    println!("  diamond {w} {x} {y} {z} does not lift");
                }
            }
            Ok(if report.is_homotopy_cover { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Command::LiftWalk { map, walk, start, json } => {
            let f = morphism::load_morphism(&map)?;
            let w = Walk::from_tokens(f.cod(), &walk)?;
            let s = f.dom().vertex_or_err(&start)?;
            let lifted = covering::lift_walk(&f, &w, s)?;
            if json {
                print_json(json!({
                    "report": "lift-walk",
                    "walk": w.display(),
                    "start": start,
                    "lifted": lifted.display(),
                }));
            } else {
                println!("{}", lifted.display());
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::LiftHomotopy { map, chain, start_lift, json } => {
            let f = morphism::load_morphism(&map)?;
            let chain = load_chain(&chain)?;
            let start = morphism::load_morphism(&start_lift)?;
            let lifted = covering::lift_homotopy(&f, &chain, &start)?;
            if json {
                print_json(json!({
                    "report": "lift-homotopy",
                    "steps": Value::Array(lifted.iter().map(morphism_json).collect()),
                }));
            } else {
                for (i, step) in lifted.iter().enumerate() {
                    let cells: Vec<String> = step
                        .dom()
                        .vertices()
                        .map(|v| format!("{}->{}", step.dom().token(v), step.cod().token(step.apply(v))))
                        .collect();
                    println!("step {i}: {}", cells.join(" "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::HomotopicWalks { graph, walk1, walk2, slack, oracle, max_len, max_states, json } => {
            let g = load_graph_arg(&graph)?;
            let w1 = Walk::from_tokens(&g, &walk1)?;
            let w2 = Walk::from_tokens(&g, &walk2)?;
            if oracle {
                let bounds = OracleBounds {
                    max_len: max_len.unwrap_or(w1.len() + w2.len() + 4),
                    max_states,
                };
                let verdict = graph_homotopy::oracle_homotopic_rel_endpoints(&w1, &w2, bounds)?;
                let (text, ok) = match verdict {
                    OracleVerdict::Yes => ("yes", true),
                    OracleVerdict::NoWithinBounds => ("no-within-bounds", false),
                };
                if json {
                    print_json(json!({
                        "report": "homotopic-walks",
                        "method": "oracle",
                        "verdict": text,
                        "max_len": bounds.max_len,
                        "max_states": bounds.max_states,
                    }));
                } else {
                    println!("{text}");
                }
                Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
            } else {
                let v = w1.start();
                let verdict = universal::homotopic_rel_endpoints(&g, v, &w1, &w2, slack)?;
                let (text, depths, ok) = match verdict {
                    LiftVerdict::Yes { depths } => ("yes", depths, true),
                    LiftVerdict::No { depths } => ("no", depths, false),
                    LiftVerdict::Unstable { depths } => ("unstable", depths, false),
                };
                if json {
                    print_json(json!({
                        "report": "homotopic-walks",
                        "method": "lifting",
                        "verdict": text,
                        "depths": [depths.0, depths.1],
                    }));
                } else {
                    println!("{text} (depths {} and {})", depths.0, depths.1);
                }
                Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
            }
        }

        Command::HomotopicMaps { first, second, max_states, json } => {
            let f = morphism::load_morphism(&first)?;
            let g = morphism::load_morphism(&second)?;
            let verdict = morphism::homotopic(&f, &g, max_states)?;
            let (text, moves, ok): (&str, Vec<Value>, bool) = match &verdict {
                HomVerdict::Yes(moves) => (
                    "yes",
                    moves
                        .iter()
                        .map(|m| {
                            json!({
                                "vertex": f.dom().token(m.vertex),
                                "new_image": f.cod().token(m.new_image),
                            })
                        })
                        .collect(),
                    true,
                ),
                HomVerdict::No => ("no", Vec::new(), false),
                HomVerdict::Inconclusive => ("inconclusive", Vec::new(), false),
            };
            if json {
                print_json(json!({
                    "report": "homotopic-maps",
                    "verdict": text,
                    "moves": Value::Array(moves),
                }));
            } else {
                println!("{text}");
                if let HomVerdict::Yes(moves) = &verdict {
                    for m in moves {
                        println!("  {} -> {}", f.dom().token(m.vertex), f.cod().token(m.new_image));
                    }
                }
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }

        Command::UniversalCover { graph, basepoint, depth, dot, json } => {
            let g = load_graph_arg(&graph)?;
            let v = g.vertex_or_err(&basepoint)?;
            let u = build_folded_cover(&g, v, depth)?;
            if let Some(path) = &dot {
                std::fs::write(path, u.to_dot())?;
            }
            if json {
                print_json(json!({
                    "report": "universal-cover",
                    "basepoint": basepoint,
                    "depth": depth,
                    "classes": u.class_count(),
                    "stabilized": u.stabilized(),
                    "frontier": u.frontier().len(),
                    "fibre": u.fibre(v).len(),
                }));
            } else {
                println!(
                    "classes: {} (frontier {}), stabilized: {}",
                    u.class_count(),
                    u.frontier().len(),
                    if u.stabilized() { "yes" } else { "no" }
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::FundamentalGroup { graph, basepoint, depth, json } => {
            let g = load_graph_arg(&graph)?;
            let v = g.vertex_or_err(&basepoint)?;
            match deck::fundamental_group(&g, v, depth)? {
                FundamentalGroup::Stabilized { description, .. } => {
                    let name = description.name.clone().unwrap_or_else(|| "unrecognized".into());
                    if json {
                        print_json(json!({
                            "report": "fundamental-group",
                            "status": "stabilized",
                            "depth": depth,
                            "group": {
                                "order": description.order,
                                "abelian": description.abelian,
                                "name": description.name,
                                "element_orders": description.element_orders,
                            },
                        }));
                    } else {
                        println!("{name}");
                    }
                }
                FundamentalGroup::Shift { evidence, depth } => {
                    if json {
                        print_json(json!({
                            "report": "fundamental-group",
                            "status": "shift",
                            "depth": depth,
                            "shift": {
                                "generator": evidence.generator.display(),
                                "fibre_size": evidence.fibre_size,
                                "covered_by_powers": evidence.covered_by_powers,
                                "fibre_counts": evidence.fibre_counts,
                            },
                        }));
                    } else {
                        println!(
                            "not stabilized at depth {depth}; shift generator ({}); fibre {} fully covered by its powers",
                            evidence.generator.display(),
                            evidence.fibre_size
                        );
                    }
                }
                FundamentalGroup::Unknown { depth, class_count, fibre_size } => {
                    if json {
                        print_json(json!({
                            "report": "fundamental-group",
                            "status": "unknown",
                            "depth": depth,
                            "classes": class_count,
                            "fibre": fibre_size,
                        }));
                    } else {
                        println!(
                            "not stabilized at depth {depth} ({class_count} classes, fibre {fibre_size}); no shift structure found"
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::DeckGroup { graph, basepoint, depth, json } => {
            let g = load_graph_arg(&graph)?;
            let v = g.vertex_or_err(&basepoint)?;
            let u = build_folded_cover(&g, v, depth)?;
            let deck = deck::deck_group(&u)?;
            let description = deck::identify_group(deck.table(), 24)?;
            if json {
                print_json(json!({
                    "report": "deck-group",
                    "order": deck.order(),
                    "elements": deck.fibre().iter().enumerate().map(|(e, _)| {
                        deck.element_walk(e).display()
                    }).collect::<Vec<_>>(),
                    "table": deck.table().mul,
                    "group": {
                        "order": description.order,
                        "abelian": description.abelian,
                        "name": description.name,
                        "element_orders": description.element_orders,
                    },
                }));
            } else {
                println!("order {}", deck.order());
                for e in 0..deck.order() {
                    println!("  element {e}: ({})", deck.element_walk(e).display());
                }
                println!(
                    "group: {}",
                    description.name.unwrap_or_else(|| "unrecognized".into())
                );
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::EnumerateCovers { graph, basepoint, depth, max_index, out_dir, json } => {
            let g = load_graph_arg(&graph)?;
            let v = g.vertex_or_err(&basepoint)?;
            let outcome = deck::enumerate_covers(&g, v, depth, max_index)?;
            let covers = match &outcome {
                EnumerationOutcome::Stabilized { covers, .. } => covers.as_slice(),
                EnumerationOutcome::Shift { covers, .. } => covers.as_slice(),
                EnumerationOutcome::NotStabilized { .. } => &[],
            };
            let mut files = Vec::new();
            if let Some(dir) = &out_dir {
                std::fs::create_dir_all(dir)?;
                let base_file = dir.join("base.graph");
                std::fs::write(&base_file, g.to_file_string())?;
                for (k, cover) in covers.iter().enumerate() {
                    let stem = format!("cover-{}-{}", cover.index, k);
                    let gfile = dir.join(format!("{stem}.graph"));
                    let mfile = dir.join(format!("{stem}.morph"));
                    std::fs::write(&gfile, cover.graph.to_file_string())?;
                    std::fs::write(
                        &mfile,
                        cover.projection.to_file_string(&format!("{stem}.graph"), "base.graph"),
                    )?;
                    files.push(stem);
                }
            }
            match &outcome {
                EnumerationOutcome::Stabilized { deck_order, covers } => {
                    if json {
                        print_json(json!({
                            "report": "enumerate-covers",
                            "status": "stabilized",
                            "deck_order": deck_order,
                            "covers": covers.iter().map(|c| json!({
                                "index": c.index,
                                "order": c.graph.order(),
                                "size": c.graph.size(),
                            })).collect::<Vec<_>>(),
                        }));
                    } else {
                        println!("deck group order {deck_order}; {} covers", covers.len());
                        for c in covers {
                            println!("  index {}: {} vertices, {} edges", c.index, c.graph.order(), c.graph.size());
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                EnumerationOutcome::Shift { evidence, covers } => {
                    if json {
                        print_json(json!({
                            "report": "enumerate-covers",
                            "status": "shift",
                            "generator": evidence.generator.display(),
                            "covers": covers.iter().map(|c| json!({
                                "index": c.index,
                                "order": c.graph.order(),
                                "size": c.graph.size(),
                            })).collect::<Vec<_>>(),
                        }));
                    } else {
                        println!(
                            "infinite cyclic deck action (shift generator ({})); cyclic quotients up to index {max_index}",
                            evidence.generator.display()
                        );
                        for c in covers {
                            println!("  index {}: {} vertices, {} edges", c.index, c.graph.order(), c.graph.size());
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                EnumerationOutcome::NotStabilized { depth, class_count, fibre_size, frontier } => {
                    if json {
                        print_json(json!({
                            "report": "enumerate-covers",
                            "status": "not-stabilized",
                            "depth": depth,
                            "classes": class_count,
                            "fibre": fibre_size,
                            "frontier": frontier,
                        }));
                    } else {
                        println!(
                            "not stabilized at depth {depth}: {class_count} classes, fibre {fibre_size}, frontier {frontier}"
                        );
                    }
                    Ok(ExitCode::SUCCESS)
                }
            }
        }

        Command::Quotient { graph, basepoint, generator, power, full, depth, output, json } => {
            let g = load_graph_arg(&graph)?;
            let v = g.vertex_or_err(&basepoint)?;
            let u = build_folded_cover(&g, v, depth)?;
            let (q, proj) = if u.stabilized() {
                let deck = deck::deck_group(&u)?;
                let subgroup = if full {
                    deck::Subgroup::new(deck.table(), (0..deck.order()).collect())?
                } else {
                    let mut elements = Vec::new();
                    for gen in &generator {
                        let mut w = Walk::from_tokens(&g, gen)?;
                        let single = w.clone();
                        for _ in 1..power {
                            w = w.concat(&single)?;
                        }
                        elements.push(deck.element_of_loop(&w)?);
                    }
                    deck::Subgroup::generated(deck.table(), &elements)
                };
                deck::quotient(&deck, &subgroup)?
            } else {
                if generator.len() != 1 || full {
                    return Err(Error::InvalidShiftGenerator);
                }
                let w = Walk::from_tokens(&g, &generator[0])?;
                deck::quotient_by_shift_power(&g, v, &w, power)?
            };
            if json {
                print_json(json!({
                    "report": "quotient",
                    "order": q.order(),
                    "size": q.size(),
                    "projection": morphism_json(&proj),
                }));
            } else {
                emit(q.to_file_string(), &output)?;
            }
            Ok(ExitCode::SUCCESS)
        }

        Command::ExportDot { graph, output } => {
            let g = load_graph_arg(&graph)?;
            emit(g.to_dot(), &output)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
