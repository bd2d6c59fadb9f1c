use std::io::{BufRead, Write};
use std::path::Path;

use anyhow::{bail, Context, Result};

use powg::game::{check_response, response_interval, Outcome, Position, Round, Transcript};
use powg::strategies::{best_challenger, powerator_pow2, Move};
use powg::Natural;

use crate::commands::solver_config;
use crate::{Role, Status};

const ENGINE_ROUNDS: u32 = 2;

/// Next non-empty input line, `None` at end of input or on `quit`.
fn read_number<R: BufRead, W: Write>(input: &mut R, out: &mut W, prompt: &str) -> Result<Option<Natural>> {
    loop {
        write!(out, "{prompt}")?;
        out.flush()?;
        let mut line = String::new();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(None);
        }
        let line = line.trim();
        match line {
            "" => continue,
            "q" | "quit" => return Ok(None),
            _ => match line.parse::<Natural>() {
                Ok(n) if n > Natural::from(0u32) => return Ok(Some(n)),
                _ => writeln!(out, "expected a positive integer")?,
            },
        }
    }
}

fn announce<W: Write>(out: &mut W, pos: &Position) -> Result<()> {
    if let Some((h, i, j)) = pos.loss_witness() {
        writeln!(out, "position lost: {i} * {j} < {h} < 2 * {i} * {j}")?;
    }
    Ok(())
}

pub fn run<R: BufRead, W: Write>(
    role: Role,
    u: &Natural,
    max_rounds: usize,
    transcript_path: Option<&Path>,
    input: &mut R,
    out: &mut W,
) -> Result<Status> {
    if *u == Natural::from(0u32) {
        bail!("u must be positive");
    }
    let start = Position::new([u.clone()])?;
    let mut pos = start.clone();
    let mut rounds: Vec<Round> = Vec::new();
    writeln!(out, "start {start}")?;

    match role {
        Role::Challenger => {
            writeln!(out, "the engine answers every challenge with a power of two")?;
            while !pos.is_lost() && rounds.len() < max_rounds {
                let Some(x) = read_number(input, out, "challenge> ")? else {
                    break;
                };
                let r = powerator_pow2(&x);
                writeln!(out, "engine answers {r}")?;
                pos = pos.apply(&r)?;
                rounds.push(Round {
                    round: rounds.len(),
                    challenge: x,
                    response: r,
                });
            }
        }
        Role::Powerator => {
            let engine = match best_challenger(&start, ENGINE_ROUNDS, &solver_config(u, None)) {
                Ok(s) => s,
                Err(e) => bail!("the engine has no strategy for {u}: {e}"),
            };
            writeln!(out, "the engine plays {}", engine.name())?;
            let mut responses: Vec<Natural> = Vec::new();
            while !pos.is_lost() && rounds.len() < max_rounds {
                let x = match engine.next_move(&start, &responses)? {
                    Move::Victory => break,
                    Move::Challenge(x) => x,
                };
                let (lo, hi) = response_interval(&x)?;
                writeln!(out, "engine challenges {x}; answer in [{lo}, {hi}]")?;
                let r = loop {
                    let Some(r) = read_number(input, out, "response> ")? else {
                        return finish(start, rounds, transcript_path, out);
                    };
                    match check_response(&x, &r) {
                        Ok(()) => break r,
                        Err(_) => writeln!(out, "{r} is not in [{lo}, {hi}]")?,
                    }
                };
                pos = pos.apply(&r)?;
                rounds.push(Round {
                    round: rounds.len(),
                    challenge: x,
                    response: r.clone(),
                });
                responses.push(r);
            }
        }
    }
    finish(start, rounds, transcript_path, out)
}

fn finish<W: Write>(start: Position, rounds: Vec<Round>, path: Option<&Path>, out: &mut W) -> Result<Status> {
    let mut pos = start.clone();
    for r in &rounds {
        pos = pos.apply(&r.response)?;
    }
    let outcome = if pos.is_lost() {
        announce(out, &pos)?;
        writeln!(out, "challenger wins in {} rounds", rounds.len())?;
        Outcome::ChallengerWins
    } else {
        writeln!(out, "powerator survives {} rounds", rounds.len())?;
        Outcome::PoweratorSurvives
    };
    let t = Transcript {
        start,
        rounds_used: rounds.len(),
        rounds,
        outcome,
    };
    if let Some(p) = path {
        std::fs::write(p, serde_json::to_string_pretty(&t)? + "\n")
            .with_context(|| format!("cannot write {}", p.display()))?;
    }
    Ok(Status::Ok)
}
