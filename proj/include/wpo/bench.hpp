#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wpo/checker.hpp"
#include "wpo/orders.hpp"
#include "wpo/term.hpp"

namespace wpo {

// One benchmark run: orient the generated family instance R_n with one
// engine and one order configuration.
struct BenchRow {
  std::size_t n = 0;
  std::string engine;
  std::string order_kind;
  std::uint64_t wall_ns = 0;
  std::uint64_t calls = 0;
  bool certified = false;
  bool timed_out = false;
};

// Self-comparison instance: both components are f applied n+1 times to x.
// Equal terms are the worst case for the unmemoized engine.
std::pair<Term, Term> gen_example1(std::size_t n);

// Family instance R_n: eleven fixed rules over f/2, g/1, h/1, s/1 plus one
// parametrized rule whose first argument is a seeded random chain of g/h
// symbols of length n. Deterministic in (n, seed); requires n >= 1.
Trs gen_family(std::size_t n, std::uint64_t seed);

std::string order_kind_name(OrderKind kind);

// Cartesian sweep over (n, engine, config) in input order; one BenchRow
// per run. Runs hitting timeout_ms are recorded as timed out, not errors.
std::vector<BenchRow> run_scaling(const std::vector<std::size_t>& ns,
                                  const std::vector<Engine>& engines,
                                  const std::vector<OrderConfig>& cfgs, std::uint64_t seed,
                                  std::uint64_t timeout_ms);

// CSV with the fixed header n,engine,order_kind,wall_ns,calls,certified,timed_out.
void write_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace wpo
