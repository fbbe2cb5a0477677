use std::io::{self, Write};

use serde::Serialize;

pub fn tsv_line<I, S>(out: &mut impl Write, fields: I) -> io::Result<()>
where
    I: IntoIterator<Item = S>,
    S: AsRef<str>,
{
    let mut first = true;
    for f in fields {
        if !first {
            out.write_all(b"\t")?;
        }
        first = false;
        out.write_all(f.as_ref().as_bytes())?;
    }
    out.write_all(b"\n")
}

/// Compact JSON followed by a newline.
pub fn json_line<T: Serialize + ?Sized>(out: &mut impl Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}
