#include "hgx/report.hpp"

#include <sstream>

namespace hgx {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Observed: return "observed";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void Report::add(const std::string& name, bool ok, const std::string& detail) {
  items.push_back({name, ok ? Status::Pass : Status::Fail, detail});
}

void Report::observe(const std::string& name, const std::string& detail) {
  items.push_back({name, Status::Observed, detail});
}

void Report::skip(const std::string& name, const std::string& detail) {
  items.push_back({name, Status::Skipped, detail});
}

void Report::merge(const Report& sub) {
  for (const auto& it : sub.items)
    items.push_back({sub.title.empty() ? it.name : sub.title + "/" + it.name, it.status, it.detail});
}

bool Report::all_passed() const { return failures() == 0; }

size_t Report::failures() const {
  size_t n = 0;
  for (const auto& it : items)
    if (it.status == Status::Fail) ++n;
  return n;
}

std::string Report::to_string() const {
  std::ostringstream os;
  if (!title.empty()) os << title << "\n";
  for (const auto& it : items) {
    os << "  [" << status_name(it.status) << "] " << it.name;
    if (!it.detail.empty()) os << "  (" << it.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace hgx
