#pragma once

#include <stdexcept>
#include <string>

namespace chbf {

// Failure classes for everything that can go wrong on the data path. The
// class picks the CLI exit status and lets tests match specific failures.
enum class Errc {
  FileNotFound,
  BadMagic,
  TruncatedFile,
  DimensionMismatch,
  CountMismatch,
  ParseError,
  LayoutVersionMismatch,
  ModelVersionMismatch,
  CorruptModelFile,
  EmptyImage,
  ZeroAreaPolygon,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::FileNotFound: return "FileNotFound";
    case Errc::BadMagic: return "BadMagic";
    case Errc::TruncatedFile: return "TruncatedFile";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::CountMismatch: return "CountMismatch";
    case Errc::ParseError: return "ParseError";
    case Errc::LayoutVersionMismatch: return "LayoutVersionMismatch";
    case Errc::ModelVersionMismatch: return "ModelVersionMismatch";
    case Errc::CorruptModelFile: return "CorruptModelFile";
    case Errc::EmptyImage: return "EmptyImage";
    case Errc::ZeroAreaPolygon: return "ZeroAreaPolygon";
  }
  return "UnknownError";
}

// Exit status per failure class. 0 = success and 1 = command-line usage
// error, so data-path failures start at 2.
constexpr int errc_exit_code(Errc c) {
  switch (c) {
    case Errc::FileNotFound:
      return 2;
    case Errc::BadMagic:
    case Errc::TruncatedFile:
    case Errc::DimensionMismatch:
    case Errc::CountMismatch:
    case Errc::ParseError:
    case Errc::CorruptModelFile:
      return 3;
    case Errc::LayoutVersionMismatch:
    case Errc::ModelVersionMismatch:
      return 4;
    case Errc::EmptyImage:
    case Errc::ZeroAreaPolygon:
      return 5;
  }
  return 1;
}

class ChbfError : public std::runtime_error {
 public:
  ChbfError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return errc_exit_code(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw ChbfError(code, message);
}

}  // namespace chbf
