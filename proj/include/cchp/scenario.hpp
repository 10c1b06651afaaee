#ifndef CCHP_SCENARIO_HPP
#define CCHP_SCENARIO_HPP

<string>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cchp/moea/types.hpp"

namespace cchp {

// Which production units are available for dispatch.
enum class CaseMode { Full, PguOff, BoilerOff };

// How the gas-side cost terms are priced: per unit of fuel bought (default)
// or per unit of PGU electric output.
enum class CostBasis { Fuel, PguOutput };

enum class PriceBand { Average, Peak, Low };
enum class BuildingClass { Commercial, Residential };

// Time-of-use electricity pricing plus the flat gas price, all in Yuan/kWh.
struct TariffSchedule {
    BuildingClass building = BuildingClass::Residential;
    double average = 0.5;
    double peak = 0.65;
    double low = 0.45;
    double gas = 0.22;
    std::array<PriceBand, 24> bands{}; // hour -> band

    bool operator==(const TariffSchedule&) const = default;
};

// Hour -> band map used when a scenario does not override it:
// peak 08-11 and 18-22, low 23-06, average otherwise.
std::array<PriceBand, 24> default_band_map();

// Band prices per building class (commercial 0.87/1.305/0.435,
// residential 0.5/0.65/0.45, gas 0.22 for both).
TariffSchedule default_tariff(BuildingClass building);

// Electricity price for a period index; hours wrap every 24 periods.
double electricity_price(const TariffSchedule& tariff, std::size_t period);
double gas_price(const TariffSchedule& tariff);

// Fuel-to-power curve parameters and component conversion efficiencies.
struct ConversionConstants {
    double fuel_per_kwh_power = 2.67;   // a: kWh fuel per kWh electricity
    double fuel_floor = 11.43;          // b: minimum fuel draw while running
    double pgu_thermal_eff = 0.51;      // recovered heat per kWh fuel
    double boiler_eff = 0.9;
    double cooling_eff = 0.7;
    double heating_eff = 0.85;

    bool operator==(const ConversionConstants&) const = default;
};

// Site-to-primary energy factors (kWh per kWh) and CO2 factors (g per kWh).
struct EmissionEnergyFactors {
    double pec_electricity = 3.336;
    double pec_gas = 1.047;
    double cde_electricity = 203.74;
    double cde_gas = 200.0;

    bool operator==(const EmissionEnergyFactors&) const = default;
};

// Per-period energy demands in kWh.
struct DemandProfile {
    std::vector<double> electricity;
    std::vector<double> cooling;
    std::vector<double> heating;

    std::size_t periods() const { return electricity.size(); }
    bool operator==(const DemandProfile&) const = default;
};

// Everything a dispatch optimization needs. Decision variables are laid out
// period-major: [X1(1), X2(1), X3(1), X1(2), ...] with X1 grid electricity,
// X2 PGU fuel, X3 boiler fuel, all kWh.
struct Scenario {
    std::string name = "scenario";
    CaseMode mode = CaseMode::Full;
    CostBasis cost_basis = CostBasis::Fuel;
    TariffSchedule tariff;
    ConversionConstants constants;
    EmissionEnergyFactors factors;
    DemandProfile demand;
    moea::Bounds bounds;
    bool synthetic_profile = false;

    std::size_t periods() const { return demand.periods(); }

    // Throws std::invalid_argument naming the offending field.
    void validate() const;

    bool operator==(const Scenario&) const = default;
};

// [0, 2 x total demand of the period] for each variable; switched-off units
// get a degenerate [0, 0] interval.
moea::Bounds default_bounds(const DemandProfile& demand, CaseMode mode);

// Re-apply the mode's forced zero bounds (used when a CLI flag overrides the
// scenario's case).
void force_mode_bounds(Scenario& scenario, CaseMode mode);

const char* to_string(CaseMode mode);
const char* to_string(CostBasis basis);
const char* to_string(BuildingClass building);

} // namespace cchp

#endif
