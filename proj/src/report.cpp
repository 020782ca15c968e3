#include "sumset/report.hpp"

#include <openssl/evp.h>

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace sumset {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kVacuous:
      return "vacuous";
  }
  return "unknown";
}

namespace {

std::string render(const MetricValue& v, bool decimal) {
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  const auto& q = std::get<Rational>(v);
  std::string s = to_fraction_string(q);
  if (decimal) s += " (~" + to_decimal_string(q) + ")";
  return s;
}

}  // namespace

const MetricValue* Report::find(std::string_view name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return &m.value;
  }
  return nullptr;
}

std::int64_t Report::integer(std::string_view name) const {
  const auto* v = find(name);
  if (v == nullptr) throw std::out_of_range("no metric named " + std::string(name));
  if (const auto* i = std::get_if<std::int64_t>(v)) return *i;
  const auto& q = std::get<Rational>(*v);
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw std::domain_error("metric " + std::string(name) + " is not an integer");
  }
  return q.get_num().get_si();
}

Rational Report::rational(std::string_view name) const {
  const auto* v = find(name);
  if (v == nullptr) throw std::out_of_range("no metric named " + std::string(name));
  if (const auto* i = std::get_if<std::int64_t>(v)) return make_rational(*i);
  return std::get<Rational>(*v);
}

std::string Report::metric_records(bool decimal) const {
  std::string out;
  for (const auto& m : metrics) out += m.name + "\t" + render(m.value, decimal) + "\n";
  return out;
}

std::string Report::records(bool decimal) const {
  std::string out = "command\t" + command + "\n";
  out += "inputs\t" + (inputs_digest.empty() ? std::string("none") : inputs_digest) + "\n";
  out += "seed\t" + (seed ? std::to_string(*seed) : std::string("none")) + "\n";
  out += metric_records(decimal);
  out += "verdict\t" + std::string(verdict_name(verdict)) + "\n";
  if (witness) out += "witness\t" + *witness + "\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["inputs"] = inputs_digest.empty() ? "none" : inputs_digest;
  if (seed) j["seed"] = *seed;
  else j["seed"] = "none";
  nlohmann::ordered_json ms = nlohmann::ordered_json::object();
  for (const auto& m : metrics) {
    if (const auto* i = std::get_if<std::int64_t>(&m.value)) ms[m.name] = *i;
    else ms[m.name] = to_fraction_string(std::get<Rational>(m.value));
  }
  j["metrics"] = ms;
  j["verdict"] = verdict_name(verdict);
  if (witness) j["witness"] = *witness;
  return j.dump();
}

std::string Report::metrics_digest() const { return sha256_hex(metric_records()); }

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

}  // namespace sumset
