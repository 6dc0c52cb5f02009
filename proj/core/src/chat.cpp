#include "hypergen/chat.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "hypergen/error.hpp"

namespace hypergen {

using nlohmann::json;

void ChatRequest::validate() const {
  if (model.empty()) throw InvalidArgumentError("chat request has no model");
  if (messages.empty() || messages.front().role != "system")
    throw InvalidArgumentError("chat request must start with a system message");
  for (std::size_t i = 0; i < messages.size(); ++i) {
    const auto& m = messages[i];
    if (i > 0 && m.role == "system") throw InvalidArgumentError("chat request has more than one system message");
    if (m.role != "system" && m.role != "user") throw InvalidArgumentError("unsupported message role: " + m.role);
    if (m.content.empty()) throw InvalidArgumentError("chat message content is empty");
  }
}

std::string ChatConfig::api_key_from_env() {
  const char* v = std::getenv(kApiKeyEnv);
  return v ? std::string(v) : std::string();
}

std::string chat_request_json(const ChatRequest& req) {
  json body;
  body["model"] = req.model;
  body["messages"] = json::array();
  for (const auto& m : req.messages) body["messages"].push_back({{"role", m.role}, {"content", m.content}});
  body["temperature"] = req.temperature;
  if (req.seed) body["seed"] = *req.seed;
  return body.dump();
}

ChatResponse parse_chat_response_json(const std::string& body) {
  json doc = json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw ProtocolError("response body is not JSON");
  ChatResponse out;
  try {
    const auto& content = doc.at("choices").at(0).at("message").at("content");
    if (!content.is_string()) throw ProtocolError("choices[0].message.content is not a string");
    out.content = content.get<std::string>();
  } catch (const json::exception&) {
    throw ProtocolError("response has no choices[0].message.content");
  }
  if (auto it = doc.find("usage"); it != doc.end() && it->is_object()) {
    out.prompt_tokens = it->value("prompt_tokens", std::uint64_t{0});
    out.completion_tokens = it->value("completion_tokens", std::uint64_t{0});
    out.total_tokens = it->value("total_tokens", out.prompt_tokens + out.completion_tokens);
  }
  return out;
}

ChatClient::ChatClient(ChatConfig config) : config_(std::move(config)) {
  const auto scheme = config_.base_url.find("://");
  if (scheme == std::string::npos) throw InvalidArgumentError("base URL needs a scheme: " + config_.base_url);
  const auto slash = config_.base_url.find('/', scheme + 3);
  scheme_host_port_ = config_.base_url.substr(0, slash);
  path_ = slash == std::string::npos ? std::string() : config_.base_url.substr(slash);
  while (!path_.empty() && path_.back() == '/') path_.pop_back();
  path_ += "/v1/chat/completions";
  if (config_.max_in_flight == 0) config_.max_in_flight = 1;
  if (!config_.transcript_path.empty()) {
    transcript_.open(config_.transcript_path, std::ios::out | std::ios::app);
    if (!transcript_) throw Error("cannot open transcript " + config_.transcript_path);
  }
}

ChatClient::~ChatClient() = default;

std::uint64_t ChatClient::requests_sent() const {
  std::lock_guard lock(mutex_);
  return sent_;
}

std::uint64_t ChatClient::retries() const {
  std::lock_guard lock(mutex_);
  return retries_;
}

void ChatClient::log(const std::string& line) {
  std::lock_guard lock(mutex_);
  if (transcript_) {
    transcript_ << line << '\n';
    transcript_.flush();
  }
}

namespace {

bool retryable_status(int status) { return status == 429 || status >= 500; }

}  // namespace

ChatResponse ChatClient::complete(const ChatRequest& req, const std::string& tag) {
  if (config_.api_key.empty())
    throw CredentialError(std::string("no API key configured (set ") + kApiKeyEnv + ")");
  req.validate();
  const auto body = chat_request_json(req);

  std::uint64_t id;
  {
    std::unique_lock lock(mutex_);
    slot_free_.wait(lock, [&] { return in_flight_ < config_.max_in_flight; });
    ++in_flight_;
    id = next_id_++;
  }
  struct Release {
    ChatClient* c;
    ~Release() {
      {
        std::lock_guard lock(c->mutex_);
        --c->in_flight_;
      }
      c->slot_free_.notify_one();
    }
  } release{this};

  json entry = {{"id", id}, {"tag", tag}, {"request", json::parse(body)}};
  auto finish = [&](const std::string& key, const json& value, int attempts, int status) {
    entry["attempts"] = attempts;
    entry["status"] = status;
    entry[key] = value;
    log(entry.dump());
  };

  httplib::Client http(scheme_host_port_);
  if (!http.is_valid()) throw TransportError("unsupported base URL " + config_.base_url);
  const auto secs = [](std::chrono::milliseconds ms) {
    return std::make_pair(static_cast<time_t>(ms.count() / 1000), static_cast<time_t>((ms.count() % 1000) * 1000));
  };
  const auto [ts, tus] = secs(config_.timeout);
  http.set_connection_timeout(ts, tus);
  http.set_read_timeout(ts, tus);
  http.set_write_timeout(ts, tus);
  const httplib::Headers headers = {{"Authorization", "Bearer " + config_.api_key}};

  std::string last_error;
  int status = 0;
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      const double factor = std::pow(config_.backoff_factor, attempt - 1);
      const auto wait = std::min<double>(static_cast<double>(config_.initial_backoff.count()) * factor,
                                         static_cast<double>(config_.max_backoff.count()));
      std::this_thread::sleep_for(std::chrono::milliseconds(static_cast<long long>(wait)));
      std::lock_guard lock(mutex_);
      ++retries_;
    }
    {
      std::lock_guard lock(mutex_);
      ++sent_;
    }
    auto res = http.Post(path_, headers, body, "application/json");
    if (!res) {
      status = 0;
      last_error = "network error: " + httplib::to_string(res.error());
      continue;
    }
    status = res->status;
    if (status == 401 || status == 403) {
      finish("error", "credential rejected", attempt + 1, status);
      throw CredentialError("credential rejected with HTTP " + std::to_string(status));
    }
    if (retryable_status(status)) {
      last_error = "HTTP " + std::to_string(status);
      continue;
    }
    if (status < 200 || status >= 300) {
      finish("error", res->body, attempt + 1, status);
      throw TransportError("non-retryable HTTP " + std::to_string(status));
    }
    ChatResponse out;
    try {
      out = parse_chat_response_json(res->body);
    } catch (const ProtocolError& e) {
      finish("error", e.what(), attempt + 1, status);
      throw;
    }
    out.attempts = attempt + 1;
    finish("response", json{{"content", out.content},
                             {"usage", {{"prompt_tokens", out.prompt_tokens},
                                        {"completion_tokens", out.completion_tokens},
                                        {"total_tokens", out.total_tokens}}}},
           out.attempts, status);
    return out;
  }
  finish("error", last_error, config_.max_retries + 1, status);
  throw TransportError("retry budget exhausted after " + std::to_string(config_.max_retries + 1) +
                       " attempts (" + last_error + ")");
}

ChatResponse chat_complete(const ChatConfig& config, const ChatRequest& req) {
  ChatClient client(config);
  return client.complete(req);
}

RemoteBackend::RemoteBackend(ChatClient& client, std::string model, double temperature)
    : client_(client), model_(std::move(model)), temperature_(temperature) {}

std::string RemoteBackend::ask(AgentRole role, const Prompt& prompt, std::uint64_t seed) {
  ChatRequest req;
  req.model = model_;
  req.temperature = temperature_;
  req.seed = static_cast<std::int64_t>(seed & 0x7fffffffULL);
  req.messages = {{"system", prompt.system}, {"user", prompt.user}};
  return client_.complete(req, std::string(role_name(role))).content;
}

CandidateHyperedge RemoteBackend::generate(const GeneratorContext& ctx, std::uint64_t seed) {
  return parse_generator_response(ask(AgentRole::kGenerator, build_prompt(ctx), seed), ctx.center->id);
}

ReviewDecision RemoteBackend::review(const ReviewerContext& ctx, std::uint64_t seed) {
  return parse_reviewer_response(ask(AgentRole::kReviewer, build_prompt(ctx), seed));
}

RemovalDecision RemoteBackend::remove(const RemoverContext& ctx, std::uint64_t seed) {
  return parse_remover_response(ask(AgentRole::kRemover, build_prompt(ctx), seed));
}

StrategyDirective RemoteBackend::optimize(const OptimizerContext& ctx, std::uint64_t seed) {
  return parse_optimizer_response(ask(AgentRole::kOptimizer, build_prompt(ctx), seed));
}

}  // namespace hypergen
