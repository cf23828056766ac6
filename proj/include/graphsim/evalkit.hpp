#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphsim/jsonutil.hpp"

namespace graphsim::evalkit {

// Deployment-readiness heuristics.
inline constexpr double kMinDeployableF1 = 0.90;
inline constexpr double kMaxDeployableIA = 0.30;

struct ToolCallRecord {
  std::string name;
  json args;

  json to_json() const;
  static ToolCallRecord from_json(const json &doc);
};

struct GroundTruthCall {
  ToolCallRecord call;
  std::set<std::string> required_args;

  json to_json() const;
  static GroundTruthCall from_json(const json &doc);
};

struct GroundTruthInstance {
  std::string task_id;
  std::string instance_id;
  std::vector<GroundTruthCall> calls;
  std::string answer;

  json to_json() const;
  static GroundTruthInstance from_json(const json &doc);
};

struct Transcript {
  std::string task_id;
  std::string instance_id;
  std::vector<ToolCallRecord> calls;
  std::string final_answer;

  json to_json() const;
  static Transcript from_json(const json &doc);
};

struct ScoreCard {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double acc = 0.0;
  std::size_t matched = 0;  // M
  std::size_t predicted = 0;  // m
  std::size_t expected = 0;   // n
};

struct ReportRow {
  std::string name;
  double acc = 0.0;
  double f1 = 0.0;
  double ia = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t instances = 0;

  json to_json() const;
};

struct MatchOptions {
  // Ground truth and prediction run in different sessions, so the routing key
  // never compares equal; it is skipped by default.
  bool ignore_graph_id = true;
};

// Order-sensitive chain comparison: position i matches iff names are equal
// and every required argument key-value pair of the ground-truth call appears
// exactly in the predicted call. P = M/m (0 if m=0), R = M/n (1 if n=0),
// F1 = 2PR/(P+R) (0 if P+R=0). acc is left 0.
ScoreCard match_sequence(const std::vector<ToolCallRecord> &pred, const GroundTruthInstance &gt,
                         const MatchOptions &options = {});

// match_sequence plus answer accuracy: acc = 1 iff the canonicalized final
// answer equals the canonicalized ground-truth answer.
ScoreCard score_instance(const Transcript &t, const GroundTruthInstance &gt,
                         const MatchOptions &options = {});

double compute_ia(double acc, double f1);

// p +/- 1.96*sqrt(p(1-p)/n), clamped to [0,1].
std::pair<double, double> confidence_interval(double p, std::size_t n);

struct Report {
  std::vector<ReportRow> per_task;  // sorted by task name
  ReportRow overall;                // unweighted mean of task means

  json to_json() const;
  std::string to_table() const;
};

// Task-level metric = mean over instances; overall = macro-average of task
// means. CI is computed on acc with the per-task instance count (mean count
// for aggregate rows).
Report aggregate(const std::vector<std::pair<std::string, ScoreCard>> &scored);

// Aggregate rows over named task groups (each group row averages its tasks'
// means; CI per the same per-task-n convention).
std::vector<ReportRow> aggregate_groups(const Report &report,
                                        const std::vector<std::pair<std::string, std::vector<std::string>>> &groups);

struct ThresholdReport {
  bool deployable = false;
  std::vector<std::string> reasons;

  json to_json() const;
};

ThresholdReport threshold_report(const ReportRow &overall);

// Line-delimited files; one document per line.
std::vector<Transcript> load_transcripts(const std::string &path);
std::vector<GroundTruthInstance> load_ground_truth(const std::string &path);
void save_transcripts(const std::string &path, const std::vector<Transcript> &transcripts);

// Pairs transcripts with ground truth by (task_id, instance_id), scores each
// pair, and aggregates. Instances without a matching transcript score as an
// empty prediction with an empty answer.
Report evaluate(const std::vector<Transcript> &transcripts,
                const std::vector<GroundTruthInstance> &ground_truth,
                const MatchOptions &options = {});

}  // namespace graphsim::evalkit
