#pragma once

#include "equicolor/graph.hpp"
#include "equicolor/rational.hpp"
#include "equicolor/solver.hpp"
#include "equicolor/threads.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace equicolor {

enum class DischargeMode { M4, M3 };

std::string_view mode_name(DischargeMode mode);
std::optional<DischargeMode> parse_mode(std::string_view name);
Rational mode_d0(DischargeMode mode);  // 5/2 or 7/3
Rational girth_d0(int g);              // 2g / (g - 2)

struct Transfer {
  VertexId from = kNoVertex;
  VertexId to = kNoVertex;
  Rational amount;
  std::string rule;  // "R1" or "R2"
};

// Charges are indexed by vertex id; dead ids hold 0.
struct ChargeLedger {
  Rational d0;
  std::vector<Rational> initial;
  std::vector<Rational> final;
  std::vector<Transfer> transfers;

  Rational total_initial() const;
  Rational total_final() const;
};

ChargeLedger charges_init(const Graph& g, const Rational& d0);
// Throws ThreadCycle (a PreconditionViolated kind) when a thread-cycle is present.
ChargeLedger apply_rules(ChargeLedger ledger, const Graph& g, DischargeMode mode);

bool is_bad(const ThreadIndex& idx, VertexId v, DischargeMode mode);

// Hypotheses of the local structure claims that fail at v, as short tags.
std::vector<std::string> claim_violations(const ThreadIndex& idx, VertexId v, DischargeMode mode);

// v, its loosely 0- and 1-adjacent vertices.
std::vector<VertexId> loose_ball(const ThreadIndex& idx, VertexId v);

struct NegativeVertex {
  VertexId vertex = kNoVertex;
  Rational charge;
  bool on_pure_cycle = false;
  std::vector<std::pair<VertexId, std::string>> violations;  // (where, tag) in the loose ball
  std::optional<Config> witness;
  bool falsified = false;
};

struct AuditReport {
  DischargeMode mode = DischargeMode::M4;
  ChargeLedger ledger;
  Rational total;
  bool conserved = false;
  bool total_negative = false;
  bool pure_cycle = false;
  std::vector<NegativeVertex> negatives;
  int falsified = 0;
};

AuditReport audit(const Graph& g, DischargeMode mode);

}  // namespace equicolor
