use std::collections::BTreeMap;
use std::path::PathBuf;

use heinzlab::linalg::{ComplexMatrix, HermitianMatrix, NormSelector, PositiveMatrix};
use heinzlab::means::{op_arith_mean, op_geom_mean, op_heinz_mean, phi_interpolant, psi_interpolant, MeanInputs};
use heinzlab::scalar::{heron, kantorovich, nabla, scalar_means, sharp, ScalarPair, WeightParams};
use heinzlab::linalg::ui_norm;

use crate::output::{g15, matrix};
use crate::{usage, Failure, EXIT_OK};

#[derive(clap::Args)]
pub struct EvalArgs {
    /// means, arith, geom, heinz, heron, kantorovich, norms, psi, phi, eig, power, det, trace.
    #[arg(long)]
    op: String,
    /// `key=value` pairs.
    #[arg(long, num_args = 1..)]
    params: Vec<String>,
    /// Matrix files in the `{"dim", "entries"}` format.
    #[arg(long, num_args = 1..)]
    matrix: Vec<PathBuf>,
    /// Norms for `norms`, `psi` and `phi`; defaults to Ky Fan 1..n and Schatten 1, 2, 3, ∞.
    #[arg(long, value_delimiter = ',')]
    norms: Option<Vec<NormSelector>>,
    /// Writes a matrix result in the matrix file format.
    #[arg(long)]
    out: Option<PathBuf>,
}

struct Params(BTreeMap<String, f64>);

impl Params {
    fn parse(raw: &[String]) -> Result<Self, Failure> {
        let mut map = BTreeMap::new();
        for kv in raw {
            let (k, v) = kv.split_once('=').ok_or_else(|| usage(format!("parameter `{kv}` is not key=value")))?;
            let v: f64 = v.parse().map_err(|_| usage(format!("parameter `{k}`: `{v}` is not a number")))?;
            map.insert(k.to_string(), v);
        }
        Ok(Params(map))
    }

    fn get(&self, key: &str) -> Result<f64, Failure> {
        self.0.get(key).copied().ok_or_else(|| usage(format!("missing parameter `{key}`")))
    }

    fn or(&self, key: &str, default: f64) -> f64 {
        self.0.get(key).copied().unwrap_or(default)
    }
}

enum Value {
    Scalars(Vec<(String, f64)>),
    Matrix(ComplexMatrix),
}

fn load(path: &PathBuf) -> Result<ComplexMatrix, Failure> {
    let body = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&body).map_err(|e| usage(format!("{}: malformed matrix file: {e}", path.display())))
}

fn matrices(args: &EvalArgs, n: usize) -> Result<Vec<ComplexMatrix>, Failure> {
    if args.matrix.len() != n {
        return Err(usage(format!("`{}` takes {n} matrix file(s), got {}", args.op, args.matrix.len())));
    }
    args.matrix.iter().map(load).collect()
}

fn positive(m: ComplexMatrix) -> Result<PositiveMatrix, Failure> {
    Ok(PositiveMatrix::from_matrix(m)?)
}

fn definite(m: ComplexMatrix) -> Result<PositiveMatrix, Failure> {
    Ok(PositiveMatrix::definite_from_matrix(m)?)
}

fn norm_list(args: &EvalArgs, dim: usize) -> Vec<NormSelector> {
    args.norms.clone().unwrap_or_else(|| NormSelector::standard_family(dim))
}

fn scalar_mean(op: &str, p: &Params) -> Result<f64, Failure> {
    let pair = ScalarPair::new(p.get("rho")?, p.get("sigma")?)?;
    let (a, b) = (pair.rho, pair.sigma);
    let kappa = p.or("kappa", 0.5);
    Ok(match op {
        "arith" => nabla(a, b, kappa),
        "geom" => sharp(a, b, kappa),
        "heron" => heron(a, b, p.or("theta", 0.5)),
        _ => heinzlab::scalar::heinz(a, b, kappa),
    })
}

fn evaluate(args: &EvalArgs) -> Result<Value, Failure> {
    let p = Params::parse(&args.params)?;
    let op = args.op.as_str();
    Ok(match op {
        "kantorovich" => Value::Scalars(vec![("K".into(), kantorovich(p.get("t")?)?)]),
        "means" => {
            let pair = ScalarPair::new(p.get("rho")?, p.get("sigma")?)?;
            let params = WeightParams { kappa: p.or("kappa", 0.5), theta: p.or("theta", 0.5), ..Default::default() };
            let m = scalar_means(&pair, &params)?;
            Value::Scalars(vec![
                ("arith".into(), m.arith_nabla),
                ("geom".into(), m.geom_sharp),
                ("heinz".into(), m.heinz),
                ("heron".into(), m.heron),
            ])
        }
        "arith" | "geom" | "heinz" | "heron" if args.matrix.is_empty() => Value::Scalars(vec![(op.into(), scalar_mean(op, &p)?)]),
        "arith" | "geom" | "heinz" => {
            let mut ms = matrices(args, 2)?.into_iter();
            let (t, s) = (definite(ms.next().expect("two"))?, definite(ms.next().expect("two"))?);
            let kappa = p.get("kappa")?;
            let mean = match op {
                "arith" => op_arith_mean(&t, &s, kappa)?,
                "geom" => op_geom_mean(&t, &s, kappa)?,
                _ => op_heinz_mean(&t, &s, kappa)?,
            };
            Value::Matrix(mean.matrix().clone())
        }
        "norms" => {
            let m = matrices(args, 1)?.remove(0);
            let sels = norm_list(args, m.dim());
            Value::Scalars(sels.iter().map(|s| Ok((s.to_string(), ui_norm(&m, *s)?))).collect::<Result<_, Failure>>()?)
        }
        "psi" | "phi" => {
            let mut ms = matrices(args, 3)?.into_iter();
            let t = definite(ms.next().expect("three"))?;
            let s = definite(ms.next().expect("three"))?;
            let x = ms.next().expect("three");
            let inp = MeanInputs::new(t, s, x, p.get("kappa")?, p.get("theta")?, 0.5)?;
            let sels = norm_list(args, inp.dim());
            let f = if op == "psi" { psi_interpolant } else { phi_interpolant };
            Value::Scalars(sels.iter().map(|s| Ok((s.to_string(), f(&inp, *s)?))).collect::<Result<_, Failure>>()?)
        }
        "eig" => {
            let h = HermitianMatrix::new(matrices(args, 1)?.remove(0))?;
            let values = h.eig()?.values.clone();
            Value::Scalars(values.iter().enumerate().map(|(i, v)| (format!("lambda{}", i + 1), *v)).collect())
        }
        "power" => {
            let a = positive(matrices(args, 1)?.remove(0))?;
            Value::Matrix(a.power(p.get("kappa")?)?.matrix().clone())
        }
        "det" => Value::Scalars(vec![("det".into(), positive(matrices(args, 1)?.remove(0))?.det())]),
        "trace" => Value::Scalars(vec![("trace".into(), matrices(args, 1)?.remove(0).trace().re)]),
        _ => return Err(usage(format!("unknown op `{op}`"))),
    })
}

pub fn cmd_eval(args: EvalArgs) -> Result<u8, Failure> {
    match evaluate(&args)? {
        Value::Scalars(values) if values.len() == 1 => println!("{}", g15(values[0].1)),
        Value::Scalars(values) => {
            for (name, v) in values {
                println!("{name} = {}", g15(v));
            }
        }
        Value::Matrix(m) => {
            print!("{}", matrix(&m));
            if let Some(out) = &args.out {
                let body = serde_json::to_string(&m).map_err(|e| usage(e.to_string()))?;
                std::fs::write(out, body).map_err(|e| usage(format!("{}: {e}", out.display())))?;
            }
        }
    }
    Ok(EXIT_OK)
}
