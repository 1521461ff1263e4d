//! Counter machines with step-bounded execution, Cantor pairing, a bijective
//! program numbering and enumerable functions `f: {1,2,…} → {1,2,…}`.
//!
//! Machine model. Registers hold unbounded naturals (`u128`; no run within a
//! `u64` step budget can overflow from `u64` inputs). Register 0 is the output
//! register; an input tuple `(x_1, …, x_n)` is loaded into registers `1..=n`,
//! everything else starts at zero. Instructions:
//!
//! - `INC r`: increment register `r`, continue.
//! - `DJZ r L`: if register `r` is zero jump to `L`, otherwise decrement it and
//!   continue.
//! - `OUT len`: halt and output the low `len` bits of register 0, least
//!   significant bit first.
//!
//! Every executed instruction costs one step. Jumping to (or falling through to)
//! `L = len(program)` halts with the empty output.
//!
//! Program numbering. Instruction `j` of an `n`-instruction program gets the
//! index `3r` for `INC r`, `3·len + 1` for `OUT len` and
//! `3·(r·(n+1) + L) + 2` for `DJZ r L`. The indices `a_1, …, a_n` are written as
//! the binary word `1^{a_1} 0 1^{a_2} 0 … 0 1^{a_n}` and the word `w` is
//! numbered `int("1" + w, 2) − 1`. Every natural decodes to exactly one
//! program, so the numbering is a bijection.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest register index or output length accepted by the validator.
pub const MAX_REGISTER: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Instruction {
    Inc(u64),
    Djz { reg: u64, target: u64 },
    Out(u64),
}

impl fmt::Display for Instruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instruction::Inc(r) => write!(f, "INC {r}"),
            Instruction::Djz { reg, target } => write!(f, "DJZ {reg} {target}"),
            Instruction::Out(len) => write!(f, "OUT {len}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Program {
    instructions: Vec<Instruction>,
}

impl Program {
    pub fn new(instructions: Vec<Instruction>) -> Result<Self> {
        let p = Self { instructions };
        p.validate()?;
        Ok(p)
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.instructions.len() as u64;
        if n == 0 {
            return Err(Error::MalformedProgram("empty program".into()));
        }
        for (i, ins) in self.instructions.iter().enumerate() {
            let (reg, extra) = match *ins {
                Instruction::Inc(r) => (r, None),
                Instruction::Out(len) => (0, Some(len)),
                Instruction::Djz { reg, target } => {
                    if target > n {
                        return Err(Error::MalformedProgram(format!(
                            "line {}: jump target {target} outside 0..={n}",
                            i + 1
                        )));
                    }
                    (reg, None)
                }
            };
            if reg > MAX_REGISTER || extra.is_some_and(|l| l > MAX_REGISTER) {
                return Err(Error::MalformedProgram(format!(
                    "line {}: operand exceeds {MAX_REGISTER}",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Number of registers the program touches (at least one).
    pub fn register_count(&self) -> usize {
        self.instructions
            .iter()
            .map(|ins| match *ins {
                Instruction::Inc(r) | Instruction::Djz { reg: r, .. } => r as usize + 1,
                Instruction::Out(_) => 1,
            })
            .max()
            .unwrap_or(1)
    }

    /// Canonical natural-number code; inverse of [`Program::decode`].
    pub fn encode(&self) -> Result<u64> {
        let n = self.instructions.len() as u128;
        // Start from the leading marker bit, then append the word.
        let mut acc: u128 = 1;
        let overflow = || Error::Overflow("program code");
        for (j, ins) in self.instructions.iter().enumerate() {
            let index: u128 = match *ins {
                Instruction::Inc(r) => 3 * r as u128,
                Instruction::Out(len) => 3 * len as u128 + 1,
                Instruction::Djz { reg, target } => {
                    3 * (reg as u128 * (n + 1) + target as u128) + 2
                }
            };
            if j > 0 {
                acc = acc.checked_mul(2).ok_or_else(overflow)?;
            }
            for _ in 0..index {
                acc = acc.checked_mul(2).ok_or_else(overflow)? | 1;
                if acc > u64::MAX as u128 + 1 {
                    return Err(overflow());
                }
            }
        }
        if acc > u64::MAX as u128 + 1 {
            return Err(overflow());
        }
        Ok((acc - 1) as u64)
    }

    /// The program numbered `code`.
    pub fn decode(code: u64) -> Program {
        let word = code as u128 + 1;
        let bits = 128 - word.leading_zeros() - 1;
        let mut runs = vec![0u64];
        for i in (0..bits).rev() {
            if (word >> i) & 1 == 1 {
                *runs.last_mut().unwrap() += 1;
            } else {
                runs.push(0);
            }
        }
        let n = runs.len() as u64;
        let instructions = runs
            .into_iter()
            .map(|a| {
                let q = a / 3;
                match a % 3 {
                    0 => Instruction::Inc(q),
                    1 => Instruction::Out(q),
                    _ => Instruction::Djz {
                        reg: q / (n + 1),
                        target: q % (n + 1),
                    },
                }
            })
            .collect();
        Program { instructions }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ins in &self.instructions {
            writeln!(f, "{ins}")?;
        }
        Ok(())
    }
}

impl FromStr for Program {
    type Err = Error;

    /// One instruction per line; blank lines and `#` comments are ignored.
    fn from_str(text: &str) -> Result<Self> {
        let mut instructions = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad =
                |msg: &str| Error::MalformedProgram(format!("line {}: {msg}: `{raw}`", lineno + 1));
            let mut parts = line.split_whitespace();
            let op = parts.next().unwrap().to_ascii_uppercase();
            let args: Vec<u64> = parts
                .map(|t| t.parse::<u64>().map_err(|_| bad("bad operand")))
                .collect::<Result<_>>()?;
            let ins = match (op.as_str(), args.as_slice()) {
                ("INC", [r]) => Instruction::Inc(*r),
                ("DJZ", [r, l]) => Instruction::Djz {
                    reg: *r,
                    target: *l,
                },
                ("OUT", [len]) => Instruction::Out(*len),
                _ => return Err(bad("unknown instruction")),
            };
            instructions.push(ins);
        }
        Program::new(instructions)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RunOutcome {
    Halted {
        steps_used: u64,
        #[serde(with = "bits")]
        output: Vec<bool>,
    },
    Running {
        steps_used: u64,
    },
}

impl RunOutcome {
    pub fn is_halted(&self) -> bool {
        matches!(self, RunOutcome::Halted { .. })
    }

    pub fn steps_used(&self) -> u64 {
        match self {
            RunOutcome::Halted { steps_used, .. } | RunOutcome::Running { steps_used } => {
                *steps_used
            }
        }
    }

    pub fn output(&self) -> Option<&[bool]> {
        match self {
            RunOutcome::Halted { output, .. } => Some(output),
            RunOutcome::Running { .. } => None,
        }
    }
}

pub(crate) mod bits {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[bool], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(|&b| u8::from(b))
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<bool>, D::Error> {
        Ok(Vec::<u8>::deserialize(d)?
            .into_iter()
            .map(|b| b != 0)
            .collect())
    }
}

/// Runs `program` on `input` for at most `budget` steps.
pub fn run_bounded(program: &Program, input: &[u64], budget: u64) -> Result<RunOutcome> {
    program.validate()?;
    if budget == 0 {
        return Err(Error::Config("step budget must be at least 1".into()));
    }
    let mut regs = vec![0u128; program.register_count().max(input.len() + 1)];
    for (i, &x) in input.iter().enumerate() {
        regs[i + 1] = x as u128;
    }
    let code = program.instructions();
    let mut pc = 0usize;
    let mut steps = 0u64;
    loop {
        if pc == code.len() {
            return Ok(RunOutcome::Halted {
                steps_used: steps,
                output: Vec::new(),
            });
        }
        if steps == budget {
            return Ok(RunOutcome::Running { steps_used: steps });
        }
        steps += 1;
        match code[pc] {
            Instruction::Inc(r) => {
                regs[r as usize] += 1;
                pc += 1;
            }
            Instruction::Djz { reg, target } => {
                let r = &mut regs[reg as usize];
                if *r == 0 {
                    pc = target as usize;
                } else {
                    *r -= 1;
                    pc += 1;
                }
            }
            Instruction::Out(len) => {
                let out = regs[0];
                let output = (0..len).map(|i| i < 128 && (out >> i) & 1 == 1).collect();
                return Ok(RunOutcome::Halted {
                    steps_used: steps,
                    output,
                });
            }
        }
    }
}

/// A program ignoring its input and outputting `len` copies of `bit`:
/// `OUT len` for zeros, `2^len − 1` increments of register 0 first for ones.
pub fn constant_program(bit: bool, len: u64) -> Result<Program> {
    if len == 0 || len > 16 {
        return Err(Error::MalformedProgram(format!(
            "constant program output length {len} outside 1..=16"
        )));
    }
    let incs = if bit { (1usize << len) - 1 } else { 0 };
    let mut instructions = vec![Instruction::Inc(0); incs];
    instructions.push(Instruction::Out(len));
    Program::new(instructions)
}

/// Cantor pairing `p(e, s) = (e+s)(e+s+1)/2 + s`.
pub fn encode_pair(e: u64, s: u64) -> Option<u64> {
    let t = e as u128 + s as u128;
    let z = t * (t + 1) / 2 + s as u128;
    u64::try_from(z).ok()
}

/// Inverse of [`encode_pair`].
pub fn decode_pair(z: u64) -> (u64, u64) {
    let z = z as u128;
    let t = ((8 * z + 1).isqrt() - 1) / 2;
    let s = z - t * (t + 1) / 2;
    ((t - s) as u64, s as u64)
}

/// The `e`-th pair `(M_e, k_e)` of the machine enumeration: `e` is unpaired
/// into `(program code, k)`.
pub fn enumerate_machine_pairs(e: u64) -> (Program, u64) {
    let (code, k) = decode_pair(e);
    (Program::decode(code), k)
}

/// Position of `(program, k)` in the machine enumeration.
pub fn index_of(program: &Program, k: u64) -> Result<u64> {
    encode_pair(program.encode()?, k).ok_or(Error::Overflow("machine index"))
}

/// A three-valued answer for questions that are only semi-decidable at a
/// finite budget. `Unknown` is never coerced to `No`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

/// Total injective formulas with decidable range, standing in for an r.e.
/// enumeration when exact answers are needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Surrogate {
    /// `f(a) = a + 1`
    Inc,
    /// `f(a)` = the `a`-th prime
    Prime,
    /// `f(a) = 2a`
    Double,
}

impl Surrogate {
    pub fn name(self) -> &'static str {
        match self {
            Surrogate::Inc => "inc",
            Surrogate::Prime => "prime",
            Surrogate::Double => "double",
        }
    }

    fn eval(self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::OutsideDomain(a));
        }
        match self {
            Surrogate::Inc => a.checked_add(1).ok_or(Error::Overflow("f(a) = a+1")),
            Surrogate::Double => a.checked_mul(2).ok_or(Error::Overflow("f(a) = 2a")),
            Surrogate::Prime => Ok(nth_prime(a)),
        }
    }

    fn in_range(self, y: u64) -> bool {
        match self {
            Surrogate::Inc => y >= 2,
            Surrogate::Double => y >= 2 && y.is_multiple_of(2),
            Surrogate::Prime => is_prime(y),
        }
    }

    fn preimage(self, y: u64) -> Option<u64> {
        if !self.in_range(y) {
            return None;
        }
        Some(match self {
            Surrogate::Inc => y - 1,
            Surrogate::Double => y / 2,
            Surrogate::Prime => (2..=y).filter(|&p| is_prime(p)).count() as u64,
        })
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The `a`-th prime, `a ≥ 1` (so `nth_prime(1) = 2`).
pub fn nth_prime(a: u64) -> u64 {
    assert!(a >= 1);
    let mut count = 0;
    let mut n = 1;
    while count < a {
        n += 1;
        if is_prime(n) {
            count += 1;
        }
    }
    n
}

/// Enumerates `{c + 1 : program c halts on the empty input}` by dovetailing:
/// round `t` runs candidates `0..=t` for `t` steps each and emits the newly
/// halted ones in candidate order. The set is r.e. and, as the halting set,
/// not decidable.
#[derive(Debug)]
pub struct Dovetailer {
    round_budget: u64,
    state: Mutex<DovetailState>,
}

#[derive(Debug, Default)]
struct DovetailState {
    rounds_done: u64,
    emitted: Vec<u64>,
    seen: HashSet<u64>,
}

impl Dovetailer {
    /// `round_budget` caps the number of dovetailing rounds ever executed.
    pub fn new(round_budget: u64) -> Self {
        Self {
            round_budget,
            state: Mutex::new(DovetailState::default()),
        }
    }

    pub fn round_budget(&self) -> u64 {
        self.round_budget
    }

    fn run_until<F: Fn(&DovetailState) -> bool>(
        &self,
        done: F,
    ) -> std::sync::MutexGuard<'_, DovetailState> {
        let mut st = self.state.lock().expect("dovetailer lock");
        while !done(&st) && st.rounds_done < self.round_budget {
            let t = st.rounds_done + 1;
            for c in 0..=t {
                if st.seen.contains(&c) {
                    continue;
                }
                let outcome =
                    run_bounded(&Program::decode(c), &[], t).expect("decoded programs are valid");
                if outcome.is_halted() {
                    st.seen.insert(c);
                    st.emitted.push(c + 1);
                }
            }
            st.rounds_done = t;
        }
        st
    }

    fn eval(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::OutsideDomain(a));
        }
        let st = self.run_until(|st| st.emitted.len() as u64 >= a);
        st.emitted
            .get(a as usize - 1)
            .copied()
            .ok_or(Error::NotYetEnumerated(a))
    }

    fn in_range(&self, y: u64) -> Verdict {
        if y == 0 {
            return Verdict::No;
        }
        let st = self.run_until(|st| st.seen.contains(&(y - 1)));
        if st.seen.contains(&(y - 1)) {
            Verdict::Yes
        } else {
            Verdict::Unknown
        }
    }

    /// Values emitted so far, in emission order.
    pub fn emitted(&self) -> Vec<u64> {
        self.state.lock().expect("dovetailer lock").emitted.clone()
    }
}

/// A total injective function from `{1,2,…}` into `{1,2,…}`.
#[derive(Debug)]
pub enum EnumerableFunction {
    Surrogate(Surrogate),
    Dovetailed(Dovetailer),
}

impl EnumerableFunction {
    pub fn name(&self) -> String {
        match self {
            EnumerableFunction::Surrogate(s) => s.name().to_string(),
            EnumerableFunction::Dovetailed(_) => "dovetail:halting".to_string(),
        }
    }

    pub fn is_surrogate(&self) -> bool {
        matches!(self, EnumerableFunction::Surrogate(_))
    }

    pub fn eval(&self, a: u64) -> Result<u64> {
        match self {
            EnumerableFunction::Surrogate(s) => s.eval(a),
            EnumerableFunction::Dovetailed(d) => d.eval(a),
        }
    }

    /// Whether `y ∈ f({1,2,…})`; `Unknown` for a dovetailed `f` whose budget
    /// runs out before `y` shows up.
    pub fn range_contains(&self, y: u64) -> Verdict {
        match self {
            EnumerableFunction::Surrogate(s) => Verdict::from_bool(s.in_range(y)),
            EnumerableFunction::Dovetailed(d) => d.in_range(y),
        }
    }

    /// The unique `a` with `f(a) = y`, when the range is decidable.
    pub fn preimage(&self, y: u64) -> Result<Option<u64>> {
        match self {
            EnumerableFunction::Surrogate(s) => Ok(s.preimage(y)),
            EnumerableFunction::Dovetailed(_) => Err(Error::Uncomputable("a preimage of f")),
        }
    }
}

impl FromStr for EnumerableFunction {
    type Err = Error;

    /// `inc`, `prime`, `double` or `dovetail:halting[:<rounds>]`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inc" => Ok(EnumerableFunction::Surrogate(Surrogate::Inc)),
            "prime" => Ok(EnumerableFunction::Surrogate(Surrogate::Prime)),
            "double" => Ok(EnumerableFunction::Surrogate(Surrogate::Double)),
            _ => {
                let rest = s
                    .strip_prefix("dovetail:halting")
                    .ok_or_else(|| Error::Parse(format!("unknown function `{s}`")))?;
                let rounds = match rest.strip_prefix(':') {
                    Some(r) => r
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad round budget in `{s}`")))?,
                    None if rest.is_empty() => 200,
                    None => return Err(Error::Parse(format!("unknown function `{s}`"))),
                };
                Ok(EnumerableFunction::Dovetailed(Dovetailer::new(rounds)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn prog(text: &str) -> Program {
        text.parse().unwrap()
    }

    #[test]
    fn immediate_halt() {
        let out = run_bounded(&prog("OUT 1"), &[], 10).unwrap();
        assert_eq!(
            out,
            RunOutcome::Halted {
                steps_used: 1,
                output: vec![false]
            }
        );
    }

    #[test]
    fn constant_programs() {
        for len in 1..=5 {
            for bit in [false, true] {
                let p = constant_program(bit, len).unwrap();
                let out = run_bounded(&p, &[7, 9], 100).unwrap();
                assert_eq!(out.output().unwrap(), vec![bit; len as usize].as_slice());
            }
        }
        assert_eq!(constant_program(true, 1).unwrap().encode().unwrap(), 46);
        assert!(constant_program(true, 0).is_err());
    }

    #[test]
    fn self_loop_keeps_running() {
        let out = run_bounded(&prog("DJZ 0 0"), &[], 100).unwrap();
        assert_eq!(out, RunOutcome::Running { steps_used: 100 });
    }

    #[test]
    fn halting_step_is_budget_independent() {
        // r0 := r1 + 1, output 3 bits
        let p = prog("DJZ 1 3\nINC 0\nDJZ 2 0\nINC 0\nOUT 3");
        let first = run_bounded(&p, &[4], 1000).unwrap();
        let RunOutcome::Halted {
            steps_used,
            ref output,
        } = first
        else {
            panic!("should halt")
        };
        assert_eq!(output, &vec![true, false, true]);
        for b in steps_used..steps_used + 5 {
            assert_eq!(run_bounded(&p, &[4], b).unwrap(), first);
        }
        assert!(!run_bounded(&p, &[4], steps_used - 1).unwrap().is_halted());
    }

    #[test]
    fn malformed_programs_rejected() {
        assert!("DJZ 0 5".parse::<Program>().is_err());
        assert!("".parse::<Program>().is_err());
        assert!("JMP 1".parse::<Program>().is_err());
        assert!(run_bounded(&prog("OUT 1"), &[], 0).is_err());
    }

    #[test]
    fn falling_off_the_end_halts_with_empty_output() {
        let out = run_bounded(&prog("INC 0\nINC 0"), &[], 10).unwrap();
        assert_eq!(
            out,
            RunOutcome::Halted {
                steps_used: 2,
                output: vec![]
            }
        );
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(encode_pair(0, 0), Some(0));
        assert_eq!(encode_pair(1, 0), Some(1));
        assert_eq!(encode_pair(0, 1), Some(2));
        assert_eq!(decode_pair(4), (1, 1));
    }

    #[test]
    fn pairing_bijective_on_grid() {
        let mut z = 0u64;
        for t in 0..1414u64 {
            for s in 0..=t {
                let e = t - s;
                assert_eq!(encode_pair(e, s), Some(z));
                assert_eq!(decode_pair(z), (e, s));
                z += 1;
            }
        }
        assert!(z >= 1_000_000);
    }

    #[test]
    fn program_codes_of_small_programs() {
        assert_eq!(Program::decode(0), prog("INC 0"));
        assert_eq!(prog("OUT 1").encode().unwrap(), 30);
        assert_eq!(prog("DJZ 0 0").encode().unwrap(), 6);
        assert_eq!(prog("INC 0\nOUT 1").encode().unwrap(), 46);
        assert_eq!(prog("INC 0\nINC 0\nOUT 2").encode().unwrap(), 638);
    }

    #[test]
    fn machine_pairs_round_trip() {
        for e in 0..1000 {
            let (p, k) = enumerate_machine_pairs(e);
            assert_eq!(index_of(&p, k).unwrap(), e);
        }
        let (p0, k0) = enumerate_machine_pairs(0);
        assert_eq!((p0, k0), (Program::decode(0), 0));
        let witness = prog("INC 0\nINC 0\nINC 0\nOUT 3");
        let e = index_of(&witness, 2).unwrap();
        assert_eq!(index_of(&witness, 2).unwrap(), e);
        assert_eq!(enumerate_machine_pairs(e), (witness, 2));
    }

    #[test]
    fn surrogates() {
        let inc: EnumerableFunction = "inc".parse().unwrap();
        assert_eq!(inc.eval(1).unwrap(), 2);
        assert_eq!(inc.eval(2).unwrap(), 3);
        assert!(inc.eval(0).is_err());
        let prime: EnumerableFunction = "prime".parse().unwrap();
        assert_eq!(prime.eval(1).unwrap(), 2);
        assert_eq!(prime.eval(3).unwrap(), 5);
        assert_eq!(prime.preimage(13).unwrap(), Some(6));
        assert_eq!(prime.preimage(12).unwrap(), None);
        let double: EnumerableFunction = "double".parse().unwrap();
        assert_eq!(double.range_contains(5), Verdict::No);
        assert_eq!(double.preimage(10).unwrap(), Some(5));
    }

    #[test]
    fn dovetailer_is_injective_and_positive() {
        let f: EnumerableFunction = "dovetail:halting:400".parse().unwrap();
        let mut seen = HashSet::new();
        for a in 1..=200 {
            let y = f.eval(a).unwrap();
            assert!(y >= 1);
            assert!(seen.insert(y), "repeated value {y}");
        }
        // DJZ 0 0 never halts; code 6 maps to 7.
        assert_eq!(f.range_contains(7), Verdict::Unknown);
        assert_eq!(f.range_contains(1), Verdict::Yes);
        assert!(f.preimage(1).is_err());
    }

    #[test]
    fn dovetailer_budget_is_explicit() {
        let f: EnumerableFunction = "dovetail:halting:3".parse().unwrap();
        assert!(matches!(f.eval(1000), Err(Error::NotYetEnumerated(1000))));
    }

    proptest! {
        #[test]
        fn decode_encode_round_trip(code in any::<u64>()) {
            let p = Program::decode(code);
            prop_assert!(p.validate().is_ok());
            prop_assert_eq!(p.encode().unwrap(), code);
        }

        #[test]
        fn pair_round_trip(e in 0u64..1 << 31, s in 0u64..1 << 31) {
            let z = encode_pair(e, s).unwrap();
            prop_assert_eq!(decode_pair(z), (e, s));
        }

        #[test]
        fn text_format_round_trip(code in any::<u64>()) {
            let p = Program::decode(code);
            prop_assert_eq!(p.to_string().parse::<Program>().unwrap(), p);
        }
    }
}
