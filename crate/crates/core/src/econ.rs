//! Techno-economic engine: capacity arithmetic, cost roll-ups, revenue,
//! accelerated depreciation, lagged taxation, cash flow, payback, ROI and
//! loan amortization.
//!
//! Currency is INR with crore (1e7 INR) as the working unit for totals.
//! Dollar-denominated inputs are converted at a caller-supplied exchange
//! rate. All roll-ups are plain sums over their item lists: permutation
//! invariant and additive.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// 1 crore = 1e7 INR.
pub const INR_PER_CRORE: f64 = 1e7;
/// 1 lakh = 1e5 INR.
pub const INR_PER_LAKH: f64 = 1e5;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EconError {
    #[error("cumulative cash flow never recovers the outlay")]
    NeverRecovers,
    #[error("total investment must be positive")]
    DivisionByZeroInvestment,
}

/// One equipment row: purchase and installation in USD, plus its hourly
/// utility bill.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquipmentItem {
    pub name: String,
    pub equipment_cost_usd: f64,
    pub installed_cost_usd: f64,
    #[serde(default)]
    pub utility_cost_usd_per_h: f64,
}

/// A named lump cost in INR crore (direct capital items, misc. opex).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CostItem {
    pub name: String,
    pub amount_crore: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManpowerItem {
    pub role: String,
    pub headcount: u32,
    pub salary_inr_per_year: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MaterialItem {
    pub name: String,
    pub price_inr_per_kg: f64,
    pub quantity_kg_per_year: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UtilityItem {
    pub name: String,
    pub cost_usd_per_h: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductItem {
    pub name: String,
    pub quantity_kg_per_year: f64,
    pub price_inr_per_kg: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LoanTerms {
    pub principal_crore: f64,
    pub annual_rate: f64,
    pub tenure_years: u32,
}

/// One year of the profitability ledger, INR crore.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CashFlowRow {
    pub year: u32,
    pub gross: f64,
    pub depreciation: f64,
    pub taxable: f64,
    pub taxes_paid: f64,
    pub cash_flow: f64,
    pub cumulative: f64,
}

/// One month of a loan amortization schedule, INR crore.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AmortizationRow {
    pub month: u32,
    pub payment: f64,
    pub interest: f64,
    pub principal_component: f64,
    pub balance: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EmiSchedule {
    /// Equated monthly installment, crore.
    pub emi_monthly: f64,
    /// 12 × EMI.
    pub yearly_payment: f64,
    pub total_interest: f64,
    pub total_paid: f64,
    pub rows: Vec<AmortizationRow>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquipmentRollup {
    pub equipment_crore: f64,
    pub installed_crore: f64,
    /// Purchase plus installation.
    pub combined_crore: f64,
    pub utility_crore_per_year: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedCapital {
    pub direct_crore: f64,
    pub indirect_crore_per_year: f64,
    /// Direct plus one year of indirect cost.
    pub fixed_crore: f64,
}

/// Hourly production rate in kg/h for a plant of `tpa` tonnes per annum
/// running `days` days a year, `hours` hours a day.
pub fn hourly_capacity(tpa: f64, days: f64, hours: f64) -> f64 {
    tpa * 1000.0 / (days * hours)
}

/// Σ price × quantity over raw-material and catalyst items, INR crore/yr.
pub fn material_cost_annual(items: &[MaterialItem]) -> f64 {
    items
        .iter()
        .map(|i| i.price_inr_per_kg * i.quantity_kg_per_year)
        .sum::<f64>()
        / INR_PER_CRORE
}

/// Σ hourly USD rates × operating hours, converted at `fx`, INR crore/yr.
pub fn utility_cost_annual(items: &[UtilityItem], hours_per_year: f64, fx: f64) -> f64 {
    items
        .iter()
        .map(|i| i.cost_usd_per_h * hours_per_year * fx)
        .sum::<f64>()
        / INR_PER_CRORE
}

/// Sums the equipment table's USD columns at `fx`; the utility column is
/// scaled to a yearly bill by `hours_per_year`.
pub fn equipment_rollup(items: &[EquipmentItem], fx: f64, hours_per_year: f64) -> EquipmentRollup {
    let equipment_usd: f64 = items.iter().map(|i| i.equipment_cost_usd).sum();
    let installed_usd: f64 = items.iter().map(|i| i.installed_cost_usd).sum();
    let utility_usd_per_h: f64 = items.iter().map(|i| i.utility_cost_usd_per_h).sum();
    let equipment_crore = equipment_usd * fx / INR_PER_CRORE;
    let installed_crore = installed_usd * fx / INR_PER_CRORE;
    EquipmentRollup {
        equipment_crore,
        installed_crore,
        combined_crore: equipment_crore + installed_crore,
        utility_crore_per_year: utility_usd_per_h * hours_per_year * fx / INR_PER_CRORE,
    }
}

/// Direct capital plus one year of salaried manpower, both INR crore.
pub fn fixed_capital(direct_items: &[CostItem], manpower: &[ManpowerItem]) -> FixedCapital {
    let direct_crore: f64 = direct_items.iter().map(|i| i.amount_crore).sum();
    let indirect_crore_per_year: f64 = manpower
        .iter()
        .map(|m| m.headcount as f64 * m.salary_inr_per_year)
        .sum::<f64>()
        / INR_PER_CRORE;
    FixedCapital {
        direct_crore,
        indirect_crore_per_year,
        fixed_crore: direct_crore + indirect_crore_per_year,
    }
}

/// Σ quantity × price over product items, INR crore/yr.
pub fn revenue_annual(products: &[ProductItem]) -> f64 {
    products
        .iter()
        .map(|p| p.quantity_kg_per_year * p.price_inr_per_kg)
        .sum::<f64>()
        / INR_PER_CRORE
}

/// Year-by-year depreciation: element i is `base × percents[i]`, padded
/// with zeros (or truncated) to `horizon_years` entries.
pub fn depreciation_schedule(base: f64, percents: &[f64], horizon_years: usize) -> Vec<f64> {
    debug_assert!(percents.iter().sum::<f64>() <= 1.0 + 1e-12);
    (0..horizon_years)
        .map(|i| percents.get(i).map_or(0.0, |p| base * p))
        .collect()
}

/// Builds the profitability ledger. Year 0 carries only the fixed-capital
/// outlay. For later years the taxable income is gross − depreciation and
/// taxes are paid `tax_lag` years in arrears (nothing is due while the
/// lag window has not elapsed).
pub fn cash_flow_table(
    gross_annual: f64,
    depreciation: &[f64],
    tax_rate: f64,
    tax_lag: u32,
    fixed_outlay: f64,
    horizon_years: usize,
) -> Vec<CashFlowRow> {
    let dep = |year: usize| depreciation.get(year - 1).copied().unwrap_or(0.0);
    let taxable = |year: usize| gross_annual - dep(year);

    let mut rows = Vec::with_capacity(horizon_years + 1);
    rows.push(CashFlowRow {
        year: 0,
        gross: 0.0,
        depreciation: 0.0,
        taxable: 0.0,
        taxes_paid: 0.0,
        cash_flow: -fixed_outlay,
        cumulative: -fixed_outlay,
    });
    let mut cumulative = -fixed_outlay;
    for year in 1..=horizon_years {
        let basis_year = year as i64 - tax_lag as i64;
        let taxes_paid = if basis_year >= 1 {
            tax_rate * taxable(basis_year as usize)
        } else {
            0.0
        };
        let cash_flow = gross_annual - taxes_paid;
        cumulative += cash_flow;
        rows.push(CashFlowRow {
            year: year as u32,
            gross: gross_annual,
            depreciation: dep(year),
            taxable: taxable(year),
            taxes_paid,
            cash_flow,
            cumulative,
        });
    }
    rows
}

/// Piecewise-linear break-even time of the cumulative cash flow, on an
/// axis where the year-0 outlay sits at position 1 and year n lands at
/// position n+1. Subtract 1 for the crossing measured from the outlay
/// itself.
pub fn payback(rows: &[CashFlowRow]) -> Result<f64, EconError> {
    let first = rows.first().ok_or(EconError::NeverRecovers)?;
    if first.cumulative >= 0.0 {
        return Ok(1.0);
    }
    for (prev, row) in rows.iter().zip(rows.iter().skip(1)) {
        if row.cumulative >= 0.0 {
            let fraction = -prev.cumulative / row.cash_flow;
            return Ok(row.year as f64 + fraction);
        }
    }
    Err(EconError::NeverRecovers)
}

/// Return on investment, percent.
pub fn roi(net_income: f64, total_investment: f64) -> Result<f64, EconError> {
    if total_investment <= 0.0 {
        return Err(EconError::DivisionByZeroInvestment);
    }
    Ok(100.0 * net_income / total_investment)
}

/// Standard amortization: EMI = P·r(1+r)ⁿ/((1+r)ⁿ−1) with r the monthly
/// rate and n the number of monthly payments. The final payment settles
/// the residual balance exactly.
pub fn emi_schedule(principal: f64, annual_rate: f64, tenure_years: u32) -> EmiSchedule {
    let n = tenure_years * 12;
    let r = annual_rate / 12.0;
    let emi = if r == 0.0 {
        principal / n as f64
    } else {
        let factor = (1.0 + r).powi(n as i32);
        principal * r * factor / (factor - 1.0)
    };

    let mut rows = Vec::with_capacity(n as usize);
    let mut balance = principal;
    let mut total_interest = 0.0;
    let mut total_paid = 0.0;
    for month in 1..=n {
        let interest = balance * r;
        let principal_component = if month == n { balance } else { emi - interest };
        let payment = interest + principal_component;
        balance = if month == n {
            0.0
        } else {
            balance - principal_component
        };
        total_interest += interest;
        total_paid += payment;
        rows.push(AmortizationRow {
            month,
            payment,
            interest,
            principal_component,
            balance,
        });
    }

    EmiSchedule {
        emi_monthly: emi,
        yearly_payment: 12.0 * emi,
        total_interest,
        total_paid,
        rows,
    }
}
