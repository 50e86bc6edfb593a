#pragma once

#include <nlohmann/json.hpp>

#include <iosfwd>

#include "commsplit/classify.hpp"
#include "commsplit/poset.hpp"
#include "commsplit/series.hpp"

namespace commsplit {

using Json = nlohmann::ordered_json;

// JSON schemas. Partitions: {"n":2,"m":6,"parts":{"00":1,...}} with one key
// per binary sequence. Tuples: {"n":..,"m":..,"matrices":[[[ [re,im],..],..],..]}.

Json partition_to_json(const IndexedPartition& lambda);
IndexedPartition partition_from_json(const Json& j);

Json polynomial_to_json(const Polynomial& p);  // {"text":..., "coeffs":[...]}

Json matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const Json& j);

Json tuple_to_json(const UnitaryTuple& t);
UnitaryTuple tuple_from_json(const Json& j);

Json tolerances_to_json(const Tolerances& tol);

// Debug dump of Weyl class data.
Json cycle_class_to_json(const CycleClass& w);
Json conjugacy_classes_to_json(const GroupFamily& g);

Json stratum_report_to_json(const StratumReport& report);

Json summand_report_to_json(const SummandReport& report);
Json splitting_table_to_json(const SplittingTable& table);

// CSV writers. Cells never contain commas: partitions render as "1|1|2|2",
// prime sets as "2|3|5".

void poset_csv(std::ostream& out, const std::vector<IndexedPartition>& elements);
void hasse_csv(std::ostream& out, const HasseDiagram& diagram);
void splitting_csv(std::ostream& out, const SplittingTable& table);

}  // namespace commsplit
