#include "graphsim/evalkit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "graphsim/error.hpp"

namespace graphsim::evalkit {

json ToolCallRecord::to_json() const { return json{{"name", name}, {"args", args}}; }

ToolCallRecord ToolCallRecord::from_json(const json &doc) {
  ToolCallRecord record;
  record.name = doc.at("name").get<std::string>();
  record.args = doc.value("args", json::object());
  return record;
}

json GroundTruthCall::to_json() const {
  json out = call.to_json();
  out["required_args"] = std::vector<std::string>(required_args.begin(), required_args.end());
  return out;
}

GroundTruthCall GroundTruthCall::from_json(const json &doc) {
  GroundTruthCall out;
  out.call = ToolCallRecord::from_json(doc);
  for (const auto &key : doc.value("required_args", json::array())) {
    out.required_args.insert(key.get<std::string>());
  }
  return out;
}

json GroundTruthInstance::to_json() const {
  json calls_doc = json::array();
  for (const auto &call : calls) calls_doc.push_back(call.to_json());
  return json{{"task_id", task_id},
              {"instance_id", instance_id},
              {"calls", calls_doc},
              {"answer", answer}};
}

GroundTruthInstance GroundTruthInstance::from_json(const json &doc) {
  GroundTruthInstance out;
  out.task_id = doc.at("task_id").get<std::string>();
  out.instance_id = doc.at("instance_id").get<std::string>();
  for (const auto &call : doc.value("calls", json::array())) {
    out.calls.push_back(GroundTruthCall::from_json(call));
  }
  out.answer = doc.at("answer").get<std::string>();
  return out;
}

json Transcript::to_json() const {
  json calls_doc = json::array();
  for (const auto &call : calls) calls_doc.push_back(call.to_json());
  return json{{"task_id", task_id},
              {"instance_id", instance_id},
              {"calls", calls_doc},
              {"final_answer", final_answer}};
}

Transcript Transcript::from_json(const json &doc) {
  Transcript out;
  out.task_id = doc.at("task_id").get<std::string>();
  out.instance_id = doc.at("instance_id").get<std::string>();
  for (const auto &call : doc.value("calls", json::array())) {
    out.calls.push_back(ToolCallRecord::from_json(call));
  }
  out.final_answer = doc.value("final_answer", "");
  return out;
}

json ReportRow::to_json() const {
  return json{{"name", name},         {"acc", acc},           {"f1", f1},
              {"ia", ia},             {"ci_low", ci_low},     {"ci_high", ci_high},
              {"instances", instances}};
}

namespace {

bool call_matches(const ToolCallRecord &pred, const GroundTruthCall &gt,
                  const MatchOptions &options) {
  if (pred.name != gt.call.name) return false;
  for (const auto &key : gt.required_args) {
    if (options.ignore_graph_id && key == "graph_id") continue;
    if (!pred.args.is_object() || !pred.args.contains(key)) return false;
    if (!canonical_equal(pred.args[key], gt.call.args.contains(key) ? gt.call.args[key] : json()))
      return false;
  }
  return true;
}

}  // namespace

ScoreCard match_sequence(const std::vector<ToolCallRecord> &pred, const GroundTruthInstance &gt,
                         const MatchOptions &options) {
  ScoreCard card;
  card.predicted = pred.size();
  card.expected = gt.calls.size();
  std::size_t overlap = std::min(card.predicted, card.expected);
  for (std::size_t i = 0; i < overlap; ++i) {
    if (call_matches(pred[i], gt.calls[i], options)) ++card.matched;
  }
  // P = M/m (0 if m=0), R = M/n (1 if n=0), F1 = 2PR/(P+R) (0 if P+R=0); the
  // m=0/n=0 corners follow these formulas literally.
  card.precision = card.predicted == 0
                       ? 0.0
                       : static_cast<double>(card.matched) / static_cast<double>(card.predicted);
  card.recall = card.expected == 0
                    ? 1.0
                    : static_cast<double>(card.matched) / static_cast<double>(card.expected);
  double denom = card.precision + card.recall;
  card.f1 = denom == 0.0 ? 0.0 : 2.0 * card.precision * card.recall / denom;
  return card;
}

ScoreCard score_instance(const Transcript &t, const GroundTruthInstance &gt,
                         const MatchOptions &options) {
  ScoreCard card = match_sequence(t.calls, gt, options);
  card.acc =
      canonicalize_answer(t.final_answer) == canonicalize_answer(gt.answer) ? 1.0 : 0.0;
  return card;
}

double compute_ia(double acc, double f1) { return acc - f1; }

std::pair<double, double> confidence_interval(double p, std::size_t n) {
  if (n == 0) return {0.0, 1.0};
  double margin = 1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return {std::max(0.0, p - margin), std::min(1.0, p + margin)};
}

json Report::to_json() const {
  json tasks = json::array();
  for (const auto &row : per_task) tasks.push_back(row.to_json());
  return json{{"per_task", tasks}, {"overall", overall.to_json()}};
}

std::string Report::to_table() const {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof(line), "%-34s %6s %8s %8s %8s %16s\n", "task", "n", "acc", "f1",
                "ia", "acc 95% CI");
  out << line;
  out << std::string(84, '-') << '\n';
  auto emit = [&](const ReportRow &row) {
    std::snprintf(line, sizeof(line), "%-34s %6zu %8.4f %8.4f %8.4f [%6.4f, %6.4f]\n",
                  row.name.c_str(), row.instances, row.acc, row.f1, row.ia, row.ci_low,
                  row.ci_high);
    out << line;
  };
  for (const auto &row : per_task) emit(row);
  out << std::string(84, '-') << '\n';
  emit(overall);
  return out.str();
}

Report aggregate(const std::vector<std::pair<std::string, ScoreCard>> &scored) {
  std::map<std::string, std::vector<ScoreCard>> by_task;
  for (const auto &[task, card] : scored) by_task[task].push_back(card);

  Report report;
  double acc_sum = 0.0;
  double f1_sum = 0.0;
  std::size_t total_instances = 0;
  for (const auto &[task, cards] : by_task) {
    ReportRow row;
    row.name = task;
    row.instances = cards.size();
    for (const auto &card : cards) {
      row.acc += card.acc;
      row.f1 += card.f1;
    }
    row.acc /= static_cast<double>(cards.size());
    row.f1 /= static_cast<double>(cards.size());
    row.ia = compute_ia(row.acc, row.f1);
    std::tie(row.ci_low, row.ci_high) = confidence_interval(row.acc, row.instances);
    report.per_task.push_back(row);
    acc_sum += row.acc;
    f1_sum += row.f1;
    total_instances += row.instances;
  }

  report.overall.name = "overall";
  report.overall.instances = total_instances;
  if (!report.per_task.empty()) {
    double tasks = static_cast<double>(report.per_task.size());
    report.overall.acc = acc_sum / tasks;
    report.overall.f1 = f1_sum / tasks;
    report.overall.ia = compute_ia(report.overall.acc, report.overall.f1);
    // CI convention: the per-task instance count (mean across tasks), not the
    // pooled total.
    std::size_t per_task_n =
        static_cast<std::size_t>(static_cast<double>(total_instances) / tasks + 0.5);
    std::tie(report.overall.ci_low, report.overall.ci_high) =
        confidence_interval(report.overall.acc, per_task_n);
  }
  return report;
}

std::vector<ReportRow> aggregate_groups(
    const Report &report,
    const std::vector<std::pair<std::string, std::vector<std::string>>> &groups) {
  std::map<std::string, const ReportRow *> rows;
  for (const auto &row : report.per_task) rows[row.name] = &row;

  std::vector<ReportRow> out;
  for (const auto &[group, tasks] : groups) {
    ReportRow row;
    row.name = group;
    std::size_t found = 0;
    for (const auto &task : tasks) {
      auto it = rows.find(task);
      if (it == rows.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "group '" + group + "' references unknown task '" + task + "'");
      }
      row.acc += it->second->acc;
      row.f1 += it->second->f1;
      row.instances += it->second->instances;
      ++found;
    }
    if (found == 0) continue;
    row.acc /= static_cast<double>(found);
    row.f1 /= static_cast<double>(found);
    row.ia = compute_ia(row.acc, row.f1);
    std::size_t per_task_n =
        static_cast<std::size_t>(static_cast<double>(row.instances) / found + 0.5);
    std::tie(row.ci_low, row.ci_high) = confidence_interval(row.acc, per_task_n);
    out.push_back(row);
  }
  return out;
}

json ThresholdReport::to_json() const {
  return json{{"deployable", deployable}, {"reasons", reasons}};
}

ThresholdReport threshold_report(const ReportRow &overall) {
  ThresholdReport out;
  out.deployable = true;
  char buf[128];
  if (overall.f1 < kMinDeployableF1) {
    out.deployable = false;
    std::snprintf(buf, sizeof(buf), "tool-chain F1 %.4f is below the %.2f deployment threshold",
                  overall.f1, kMinDeployableF1);
    out.reasons.push_back(buf);
  }
  if (overall.ia > kMaxDeployableIA) {
    out.deployable = false;
    std::snprintf(buf, sizeof(buf),
                  "illusive accuracy %.4f exceeds the %.2f deployment threshold", overall.ia,
                  kMaxDeployableIA);
    out.reasons.push_back(buf);
  }
  return out;
}

namespace {

std::vector<json> read_jsonl(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  std::vector<json> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json doc = json::parse(line, nullptr, false);
    if (doc.is_discarded()) {
      throw Error(ErrorCode::kInvalidArgument,
                  path + ":" + std::to_string(line_no) + " is not valid JSON");
    }
    out.push_back(std::move(doc));
  }
  return out;
}

}  // namespace

std::vector<Transcript> load_transcripts(const std::string &path) {
  std::vector<Transcript> out;
  for (const auto &doc : read_jsonl(path)) out.push_back(Transcript::from_json(doc));
  return out;
}

std::vector<GroundTruthInstance> load_ground_truth(const std::string &path) {
  std::vector<GroundTruthInstance> out;
  for (const auto &doc : read_jsonl(path)) out.push_back(GroundTruthInstance::from_json(doc));
  return out;
}

void save_transcripts(const std::string &path, const std::vector<Transcript> &transcripts) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot open '" + path + "'");
  for (const auto &t : transcripts) out << to_ordered(t.to_json()).dump() << '\n';
}

Report evaluate(const std::vector<Transcript> &transcripts,
                const std::vector<GroundTruthInstance> &ground_truth,
                const MatchOptions &options) {
  std::map<std::pair<std::string, std::string>, const Transcript *> by_key;
  for (const auto &t : transcripts) by_key[{t.task_id, t.instance_id}] = &t;

  std::vector<std::pair<std::string, ScoreCard>> scored;
  for (const auto &gt : ground_truth) {
    auto it = by_key.find({gt.task_id, gt.instance_id});
    if (it != by_key.end()) {
      scored.emplace_back(gt.task_id, score_instance(*it->second, gt, options));
    } else {
      Transcript empty;
      empty.task_id = gt.task_id;
      empty.instance_id = gt.instance_id;
      scored.emplace_back(gt.task_id, score_instance(empty, gt, options));
    }
  }
  return aggregate(scored);
}

}  // namespace graphsim::evalkit
