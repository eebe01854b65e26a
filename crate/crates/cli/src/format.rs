//! Output helpers: fixed-notation CSV cells and the parentheses uncertainty
//! convention for pretty tables.

/// Deterministic scientific notation with six significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.6e}")
}

/// value(unc) in the trailing-digit convention: the uncertainty is rounded to
/// two significant digits and the value to the matching decimal place, e.g.
/// (-3.6929e-3, 4.6e-5) -> "-3.693(46)e-3".
pub fn with_unc(value: f64, unc: f64) -> String {
    if unc <= 0.0 || !unc.is_finite() || value == 0.0 {
        return sci(value);
    }
    let exp_v = value.abs().log10().floor() as i32;
    let exp_u = unc.abs().log10().floor() as i32;
    // digits after the leading digit of the value needed to show two
    // significant digits of the uncertainty
    let digits = (exp_v - exp_u + 1).clamp(1, 12) as usize;
    let mantissa = value / 10f64.powi(exp_v);
    let unc_scaled = (unc / 10f64.powi(exp_v - digits as i32)).round() as i64;
    format!("{mantissa:.digits$}({unc_scaled})e{exp_v}")
}

/// Simple column-aligned table for `--format pretty`.
pub struct PrettyTable {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl PrettyTable {
    pub fn new<S: Into<String>>(header: Vec<S>) -> Self {
        PrettyTable {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<S: Into<String>>(&mut self, cells: Vec<S>) {
        let cells: Vec<String> = cells.into_iter().map(Into::into).collect();
        assert_eq!(cells.len(), self.header.len());
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let ncol = self.header.len();
        let mut width = vec![0usize; ncol];
        for (i, h) in self.header.iter().enumerate() {
            width[i] = h.len();
        }
        for row in &self.rows {
            for (i, c) in row.iter().enumerate() {
                width[i] = width[i].max(c.len());
            }
        }
        let mut out = String::new();
        let fmt_row = |cells: &[String], width: &[usize]| -> String {
            let mut line = String::new();
            for (i, c) in cells.iter().enumerate() {
                if i > 0 {
                    line.push_str("  ");
                }
                line.push_str(&format!("{:>w$}", c, w = width[i]));
            }
            line.push('\n');
            line
        };
        out.push_str(&fmt_row(&self.header, &width));
        let total: usize = width.iter().sum::<usize>() + 2 * (ncol - 1);
        out.push_str(&"-".repeat(total));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&fmt_row(row, &width));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parentheses_convention() {
        assert_eq!(with_unc(-3.6929e-3, 4.6e-5), "-3.693(46)e-3");
        assert_eq!(with_unc(-1.395e-11, 1.7e-13), "-1.395(17)e-11");
        assert_eq!(with_unc(0.6647, 0.0081), "6.647(81)e-1");
        assert_eq!(with_unc(5.0, 0.0), "5.000000e0");
    }

    #[test]
    fn sci_is_fixed_width_notation() {
        assert_eq!(sci(-1.3953778e-11), "-1.395378e-11");
        assert_eq!(sci(0.0), "0.000000e0");
    }
}
