#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coaltrade/model.hpp"

namespace coaltrade::data {

/// Per-building forecast series aligned with the scenario horizon.  Entry t
/// is the forecast a controller would use for slot t when planning ahead of
/// time; the true value lives in the building's series.
struct ForecastSeries {
    std::vector<double> demand;
    std::vector<double> generation;

    bool empty() const { return demand.empty() && generation.empty(); }
    int slots() const { return static_cast<int>(demand.size()); }
};

/// A complete simulation input: prices, buildings, and (optionally) their
/// forecasts.  Immutable once loaded or generated.
struct Scenario {
    std::string id;
    std::uint64_t seed = 0;
    model::PriceSeries prices;
    std::vector<model::Building> buildings;
    std::vector<ForecastSeries> forecasts;  // same order as buildings, or empty

    int horizon() const { return prices.slots(); }
    bool has_forecasts() const;

    /// Throws std::invalid_argument on any structural violation: empty
    /// building list, horizon mismatches, or model invariant failures.
    void validate() const;
};

/// Reads a scenario directory: prices.csv (`slot,buy_price,sell_price`),
/// buildings.json (id -> {rho_c, rho_d, u_max, soc_max, soc_init,
/// series_file}) and one series CSV per building
/// (`slot,demand_kwh,generation_kwh[,pred_demand_kwh,pred_generation_kwh]`).
/// Buildings are ordered by id.  Throws LoadError naming the offending
/// file, line and constraint.
Scenario load_scenario(const std::string& directory);

/// Writes the scenario back out in the load_scenario format (series files
/// named `<id>.csv`).  Values print with full round-trip precision, so
/// load(save(s)) reproduces s field for field.
void save_scenario(const Scenario& scenario, const std::string& directory);

struct GeneratorSpec {
    std::uint64_t seed = 1;
    int buildings = 4;
    int slots = 96;                  // 15-minute slots over one day
    double producer_fraction = 0.5;  // share of buildings with rooftop solar
    double forecast_noise = 0.1;     // multiplicative, uniform in [-sigma, sigma]
    std::string id;                  // derived from seed/N/T when empty
};

/// Deterministic synthetic scenario: morning/evening demand peaks, a midday
/// solar bell for producer buildings, battery parameters in realistic
/// ranges, and prices whose spread never rewards round-trip storage
/// arbitrage.  Forecasts are truth times (1 + eps), eps ~ U[-sigma, sigma].
Scenario generate_scenario(const GeneratorSpec& spec);

}  // namespace coaltrade::data
