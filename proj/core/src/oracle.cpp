#include "rewind/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "rewind/error.hpp"

namespace rwd::oracle {

std::ostream& operator<<(std::ostream& os, const Change& c) {
  os << c.tag << '(';
  std::visit([&os](const auto& v) { os << v; }, c.payload);
  return os << ')';
}

bool is_prefix(const ChangeLog& prefix, const ChangeLog& of) {
  return prefix.size() <= of.size() &&
         std::equal(prefix.begin(), prefix.end(), of.begin());
}

LogSnapshot snapshot(const LogState& st) { return st; }

LogDelta diff(const LogSnapshot& sn, const LogState& st) {
  if (!is_prefix(sn, st)) {
    std::ostringstream msg;
    msg << "diff: snapshot of length " << sn.size()
        << " is not a prefix of the current state (length " << st.size() << ")";
    throw ContractViolation(msg.str());
  }
  return LogDelta(st.begin() + static_cast<std::ptrdiff_t>(sn.size()), st.end());
}

LogState apply_change(const Change& c, const LogState& st) {
  LogState out = st;
  out.push_back(c);
  return out;
}

LogState restore(const LogSnapshot& sn, const LogState& /*st*/) { return sn; }

LogState merge(const LogDelta& d, const LogState& st) {
  LogState out = st;
  out.insert(out.end(), d.begin(), d.end());
  return out;
}

Transform apply_change(Change c) {
  return [c = std::move(c)](const LogState& st) { return apply_change(c, st); };
}

Transform restore(LogSnapshot sn) {
  return [sn = std::move(sn)](const LogState& st) { return restore(sn, st); };
}

Transform merge(LogDelta d) {
  return [d = std::move(d)](const LogState& st) { return merge(d, st); };
}

std::vector<Transform> compose_two(std::vector<Transform> s) {
  if (s.size() < 2) throw ContractViolation("compose_two: needs at least two transformations");
  Transform first = std::move(s[0]);
  Transform second = std::move(s[1]);
  std::vector<Transform> out;
  out.reserve(s.size() - 1);
  out.push_back([first = std::move(first), second = std::move(second)](const LogState& st) {
    return second(first(st));
  });
  for (std::size_t i = 2; i < s.size(); ++i) out.push_back(std::move(s[i]));
  return out;
}

Transform reduce_n(std::size_t n, std::vector<Transform> s) {
  if (n == 0) return [](const LogState& st) { return st; };
  if (n > s.size()) throw ContractViolation("reduce_n: n exceeds the trace length");
  s.resize(n);
  for (std::size_t i = 1; i < n; ++i) s = compose_two(std::move(s));
  return std::move(s.front());
}

LogState call(const ModelParser& p, const LogState& st) {
  if (p.result(st) != Outcome::success) return st;
  std::vector<Transform> trace = p.trace(st);
  const std::size_t n = trace.size();
  return reduce_n(n, std::move(trace))(st);
}

}  // namespace rwd::oracle
