//! Command-line front end: parse variety data, run the analyses, emit
//! human-readable and machine-readable reports.
//!
//! Exit codes: 0 success, 2 input error, 3 not Q-Gorenstein,
//! 4 precondition unmet, 5 verification mismatch.

mod input;
mod report;

use anticanon::anticanonical::{self, build_complex, is_piecewise_convex, trop_structure};
use anticanon::dual;
use anticanon::error::Error as CoreError;
use anticanon::num::{fmt_rat, Rat};
use anticanon::quadrics;
use anticanon::variety::{GavData, Relation};
use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use input::InputDocument;
use report::*;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "anticanon",
    version,
    about = "Anticanonical complexes of arrangement varieties"
)]
struct Cli {
    /// input document (JSON)
    #[arg(long, global = true)]
    input: Option<std::path::PathBuf>,
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// reserved for randomized helpers; core results are deterministic
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Text,
    Machine,
}

#[derive(Subcommand)]
enum Command {
    /// Check the input data and print class group and relations
    Validate,
    /// Build the anticanonical complex and classify the singularity type
    Acc {
        #[arg(long)]
        lattice_points: bool,
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        cells: bool,
        #[arg(long)]
        convexity: bool,
    },
    /// Cross-validate the complex against the dual construction
    Oracle {
        /// corrupt the first defining form before comparing (testing)
        #[arg(long)]
        inject_form_error: bool,
    },
    /// Reproduce the classification of three-dimensional canonical Fano
    /// intrinsic quadrics of complexity two
    ClassifyQuadrics {
        #[arg(long)]
        emit_table: bool,
        #[arg(long)]
        check_bounds: bool,
    },
    /// Enumerate the exponent tuples compatible with log terminality
    Tuples {
        #[arg(long, default_value_t = 2)]
        complexity: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let _ = cli.seed;
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}

fn load_data(cli: &Cli) -> Result<(GavData, Vec<String>)> {
    let path = cli
        .input
        .as_ref()
        .context("this command needs --input FILE")?;
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let doc = InputDocument::from_json(&text)?;
    let data = doc.to_data()?;
    let violations = data.validate();
    Ok((data, violations))
}

fn variable_name(d: &GavData, col: usize) -> String {
    match d.col_block(col) {
        Some((i, j)) => format!("T{}{}", i, j + 1),
        None => format!("S{}", col - d.n_total() + 1),
    }
}

fn relation_string(d: &GavData, rel: &Relation) -> String {
    let mut parts = Vec::new();
    for (coeff, exp) in &rel.terms {
        let mut factors = Vec::new();
        for (col, &e) in exp.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if e == 1 {
                factors.push(variable_name(d, col));
            } else {
                factors.push(format!("{}^{}", variable_name(d, col), e));
            }
        }
        let mono = factors.join("*");
        if *coeff == Rat::from_integer(1.into()) {
            parts.push(mono);
        } else {
            parts.push(format!("({})*{}", fmt_rat(coeff), mono));
        }
    }
    parts.join(" + ")
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Validate => cmd_validate(cli),
        Command::Acc {
            lattice_points,
            vertices,
            cells,
            convexity,
        } => cmd_acc(cli, *lattice_points, *vertices, *cells, *convexity),
        Command::Oracle { inject_form_error } => cmd_oracle(cli, *inject_form_error),
        Command::ClassifyQuadrics {
            emit_table,
            check_bounds,
        } => cmd_classify(cli, *emit_table, *check_bounds),
        Command::Tuples { complexity } => cmd_tuples(cli, *complexity),
    }
}

fn emit<T: serde::Serialize>(cli: &Cli, machine: &T, text: String) -> Result<()> {
    match cli.format {
        Format::Machine => println!("{}", serde_json::to_string_pretty(machine)?),
        Format::Text => print!("{}", text),
    }
    Ok(())
}

fn cmd_validate(cli: &Cli) -> Result<u8> {
    let (data, violations) = load_data(cli)?;
    let valid = violations.is_empty();
    let (class_group, relations) = if valid {
        let rels = data
            .relations()
            .map_err(|e| anyhow::anyhow!("{}", e))?
            .iter()
            .map(|r| relation_string(&data, r))
            .collect();
        (Some(data.class_group().describe()), rels)
    } else {
        (None, Vec::new())
    };
    let rep = ValidateReport {
        command: "validate",
        valid,
        violations: violations.clone(),
        class_group: class_group.clone(),
        relations: relations.clone(),
    };
    let mut text = String::new();
    if valid {
        text.push_str("input: valid\n");
        text.push_str(&format!("class group: {}\n", class_group.unwrap()));
        for r in &relations {
            text.push_str(&format!("relation: {}\n", r));
        }
    } else {
        text.push_str("input: INVALID\n");
        for v in &violations {
            text.push_str(&format!("violation: {}\n", v));
        }
    }
    emit(cli, &rep, text)?;
    Ok(if valid { 0 } else { 2 })
}

fn cmd_acc(
    cli: &Cli,
    show_lattice: bool,
    show_vertices: bool,
    show_cells: bool,
    convexity: bool,
) -> Result<u8> {
    let (data, violations) = load_data(cli)?;
    if !violations.is_empty() {
        eprintln!("invalid input: {}", violations.join("; "));
        return Ok(2);
    }
    let complex = match build_complex(&data) {
        Ok(cx) => cx,
        Err(CoreError::NotQGorenstein(cell)) => {
            eprintln!("not Q-Gorenstein: cell {}", cell);
            return Ok(3);
        }
        Err(e) => return Err(anyhow::anyhow!("{}", e)),
    };
    let verdict = complex
        .singularity_type()
        .map_err(|e| anyhow::anyhow!("{}", e))?;
    let lattice = if complex.bounded {
        Some(
            complex
                .lattice_points()
                .map_err(|e| anyhow::anyhow!("{}", e))?
                .iter()
                .map(|p| int_i64s(p))
                .collect::<Vec<_>>(),
        )
    } else {
        None
    };
    let piecewise = if convexity && complex.bounded {
        Some(
            is_piecewise_convex(&complex, &trop_structure(&data))
                .map_err(|e| anyhow::anyhow!("{}", e))?,
        )
    } else {
        None
    };
    let rep = AccReport {
        command: "acc",
        class_group: data.class_group().describe(),
        dimension: data.dim(),
        bounded: complex.bounded,
        gorenstein_index: complex.gorenstein_index().to_string(),
        vertices: complex
            .vertex_formula
            .iter()
            .map(|v| rat_strings(v))
            .collect(),
        cells: complex
            .cells
            .iter()
            .map(|cell| CellReport {
                rays: cell.cone.rays().iter().map(|r| int_i64s(r)).collect(),
                form: rat_strings(&cell.form),
            })
            .collect(),
        lattice_points: lattice.clone(),
        verdict: format!("{:?}", verdict.kind),
        witness: verdict.witness.as_ref().map(|w| int_i64s(w)),
        piecewise_convex: piecewise,
    };
    let mut text = String::new();
    text.push_str(&format!("class group: {}\n", rep.class_group));
    text.push_str(&format!("dimension: {}\n", rep.dimension));
    text.push_str(&format!("bounded: {}\n", rep.bounded));
    text.push_str(&format!("gorenstein index: {}\n", rep.gorenstein_index));
    text.push_str(&format!("maximal cells: {}\n", rep.cells.len()));
    if show_cells {
        for cell in &rep.cells {
            text.push_str(&format!(
                "cell rays {:?} form ({})\n",
                cell.rays,
                cell.form.join(", ")
            ));
        }
    }
    if show_vertices {
        for v in &rep.vertices {
            text.push_str(&format!("vertex ({})\n", v.join(", ")));
        }
    } else {
        text.push_str(&format!("vertices: {}\n", rep.vertices.len()));
    }
    if show_lattice {
        if let Some(points) = &rep.lattice_points {
            for p in points {
                text.push_str(&format!("lattice point {:?}\n", p));
            }
        }
    } else if let Some(points) = &rep.lattice_points {
        text.push_str(&format!("lattice points: {}\n", points.len()));
    }
    if let Some(pc) = rep.piecewise_convex {
        text.push_str(&format!("piecewise convex: {}\n", pc));
    }
    text.push_str(&format!("verdict: {}\n", rep.verdict));
    if let Some(w) = &rep.witness {
        text.push_str(&format!("witness: {:?}\n", w));
    }
    emit(cli, &rep, text)?;
    Ok(0)
}

fn cmd_oracle(cli: &Cli, inject_form_error: bool) -> Result<u8> {
    let (data, violations) = load_data(cli)?;
    if !violations.is_empty() {
        eprintln!("invalid input: {}", violations.join("; "));
        return Ok(2);
    }
    let report = if inject_form_error {
        let mut complex = match build_complex(&data) {
            Ok(cx) => cx,
            Err(CoreError::NotQGorenstein(cell)) => {
                eprintln!("not Q-Gorenstein: cell {}", cell);
                return Ok(3);
            }
            Err(e) => return Err(anyhow::anyhow!("{}", e)),
        };
        corrupt_first_cell(&mut complex);
        dual::cross_validate_against(&data, &complex)
    } else {
        dual::cross_validate(&data)
    };
    let report = match report {
        Ok(r) => r,
        Err(CoreError::NotFano) => {
            eprintln!("anticanonical class is not ample; the oracle needs a Fano input");
            return Ok(4);
        }
        Err(CoreError::NotQGorenstein(cell)) => {
            eprintln!("not Q-Gorenstein: cell {}", cell);
            return Ok(3);
        }
        Err(e) => return Err(anyhow::anyhow!("{}", e)),
    };
    let rep = OracleReport {
        command: "oracle",
        agrees: report.agrees(),
        vertex_sets_equal: report.vertex_sets_equal,
        cells: report
            .per_cell
            .iter()
            .map(|c| OracleCell {
                rays: c.cell_rays.iter().map(|r| int_i64s(r)).collect(),
                agrees: c.agrees,
            })
            .collect(),
    };
    let mut text = String::new();
    text.push_str(&format!("vertex sets equal: {}\n", rep.vertex_sets_equal));
    for c in &rep.cells {
        text.push_str(&format!(
            "cell {:?}: {}\n",
            c.rays,
            if c.agrees { "agrees" } else { "MISMATCH" }
        ));
    }
    text.push_str(&format!(
        "oracle: {}\n",
        if rep.agrees { "agreement" } else { "MISMATCH" }
    ));
    let agrees = rep.agrees;
    emit(cli, &rep, text)?;
    Ok(if agrees { 0 } else { 5 })
}

fn corrupt_first_cell(complex: &mut anticanonical::AnticanComplex) {
    use anticanon::num::int_to_rat;
    let dim = complex.ambient_dim;
    let cell = &mut complex.cells[0];
    let bad_form: Vec<Rat> = cell
        .form
        .iter()
        .map(|x| x * Rat::from_integer(2.into()))
        .collect();
    let h = cell.cone.hrep().clone();
    let mut ineqs: Vec<(Vec<Rat>, Rat)> = h
        .ineqs
        .iter()
        .map(|a| (int_to_rat(a), Rat::from_integer(0.into())))
        .collect();
    ineqs.push((bad_form.clone(), -Rat::from_integer(1.into())));
    let eqs = h
        .eqs
        .iter()
        .map(|e| (int_to_rat(e), Rat::from_integer(0.into())))
        .collect();
    cell.form = bad_form;
    cell.region = anticanon::polyhedral::Polyhedron::from_hrep(dim, ineqs, eqs);
}

fn cmd_classify(cli: &Cli, emit_table: bool, check_bounds: bool) -> Result<u8> {
    let classification = quadrics::classification().map_err(|e| anyhow::anyhow!("{}", e))?;
    if classification.classes.len() != 9 {
        eprintln!(
            "internal disagreement: expected 9 classes, found {}",
            classification.classes.len()
        );
        for rec in &classification.classes {
            eprintln!("  {}", rec.representative.invariants.tuple_string());
        }
        return Ok(5);
    }
    let rows: Vec<ClassRow> = classification
        .classes
        .iter()
        .enumerate()
        .map(|(i, rec)| {
            let r = &rec.representative;
            let d = &r.candidate.data;
            let degrees = d.generator_degrees();
            let rho = d.class_group().free_rank;
            let tor = d.class_group().torsion.len();
            let free_rows: Vec<Vec<String>> = (0..rho)
                .map(|row| degrees.iter().map(|w| w.free[row].to_string()).collect())
                .collect();
            let tor_rows: Vec<Vec<String>> = (0..tor)
                .map(|row| {
                    degrees
                        .iter()
                        .map(|w| format!("{}~", w.torsion[row]))
                        .collect()
                })
                .collect();
            let mut params = vec![r.candidate.x];
            if let Some(y) = r.candidate.y {
                params.push(y);
            }
            ClassRow {
                no: i + 1,
                shape: r.candidate.shape.label().to_string(),
                parameters: params,
                relation: d
                    .relations()
                    .map(|rels| relation_string(d, &rels[0]))
                    .unwrap_or_default(),
                class_group: r.invariants.class_group.describe(),
                degree_matrix_free: free_rows,
                degree_matrix_torsion: tor_rows,
                ample_class: class_strings(&r.ample_class),
                picard: r.invariants.picard,
                fano_index: r.invariants.fano_index.to_string(),
                eff_smooth: r.invariants.eff_smooth,
                verdict: format!("{:?}", r.verdict),
                one_dimensional_components: r.true_complexity_certified,
                merged_parameters: rec
                    .members
                    .iter()
                    .map(|(_, x, y)| {
                        let mut v = vec![*x];
                        if let Some(y) = y {
                            v.push(*y);
                        }
                        v
                    })
                    .collect(),
            }
        })
        .collect();
    let bounds = if check_bounds {
        let b = quadrics::picard_bound_checks(&classification.classes);
        Some(BoundsReport {
            max_picard: b.max_picard,
            within_three: b.all_within_three,
            within_three_plus_m: b.all_within_three_plus_m,
            within_five: b.all_within_five,
        })
    } else {
        None
    };
    let no_terminal = quadrics::no_terminal_check(&classification);
    let rep = ClassifyReport {
        command: "classify-quadrics",
        class_count: rows.len(),
        rows,
        bounds,
        no_terminal,
    };
    let mut text = String::new();
    text.push_str(&format!("classes: {}\n", rep.class_count));
    if emit_table || cli.format == Format::Text {
        for row in &rep.rows {
            text.push_str(&format!(
                "no {} | {} | params {:?} | {} | rho {} | q {} | eff {} | {} | 1-dim comps {}\n",
                row.no,
                row.shape,
                row.parameters,
                row.class_group,
                row.picard,
                row.fano_index,
                if row.eff_smooth { "smooth" } else { "singular" },
                row.verdict,
                row.one_dimensional_components,
            ));
            text.push_str(&format!("    relation {}\n", row.relation));
            text.push_str(&format!(
                "    degrees free {:?} torsion {:?} ample {:?}\n",
                row.degree_matrix_free, row.degree_matrix_torsion, row.ample_class
            ));
            if row.merged_parameters.len() > 1 {
                text.push_str(&format!(
                    "    merged parameter choices {:?}\n",
                    row.merged_parameters
                ));
            }
        }
    }
    if let Some(b) = &rep.bounds {
        text.push_str(&format!(
            "picard bounds: max {} | <=3 {} | <=3+m {} | <=5 {}\n",
            b.max_picard, b.within_three, b.within_three_plus_m, b.within_five
        ));
    }
    text.push_str(&format!("no terminal candidate: {}\n", rep.no_terminal));
    emit(cli, &rep, text)?;
    Ok(0)
}

fn cmd_tuples(cli: &Cli, complexity: usize) -> Result<u8> {
    if complexity == 0 || complexity > 2 {
        eprintln!("unsupported complexity {}", complexity);
        return Ok(2);
    }
    let families = anticanon::anticanonical::tuples::log_terminal_tuple_families(complexity);
    let rep = TuplesReport {
        command: "tuples",
        complexity,
        families: families.iter().map(|f| f.describe()).collect(),
    };
    let mut text = String::new();
    text.push_str(&format!(
        "families for complexity {}: {}\n",
        complexity,
        rep.families.len()
    ));
    for f in &rep.families {
        text.push_str(&format!("  {}\n", f));
    }
    emit(cli, &rep, text)?;
    Ok(0)
}
