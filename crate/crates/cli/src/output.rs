use clap::ValueEnum;
use serde::Serialize;

use linial_core::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Rendered output and whether every checked identity held.
pub struct Output {
    pub text: String,
    pub pass: bool,
}

pub struct Failure {
    pub message: String,
    pub code: u8,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Integrity(_) => 1,
            _ => 2,
        };
        Failure { message: e.to_string(), code }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure { message: e.to_string(), code: 2 }
    }
}

pub type CmdResult = Result<Output, Failure>;

pub fn param(msg: impl Into<String>) -> Failure {
    Failure { message: msg.into(), code: 2 }
}

/// Refuses `value > limit` unless forced.
pub fn bound(what: &str, value: u32, limit: u32, force: bool) -> Result<(), Failure> {
    if value > limit && !force {
        return Err(param(format!("{what} = {value} exceeds the limit {limit}; pass --force to run anyway")));
    }
    Ok(())
}

pub fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| param(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 output"))
}

pub fn ok(text: String) -> CmdResult {
    Ok(Output { text, pass: true })
}
