// Writes every prompt template to <out>/<template_id>.{system,user}.txt so the
// exact prompt text ships as reviewable assets. A test compares the files with
// the compiled-in library to catch drift.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "agentfact/agents/prompt_template.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: dump_prompts <output-dir>\n";
    return 2;
  }
  const std::filesystem::path out_dir(argv[1]);
  std::filesystem::create_directories(out_dir);

  const auto& library = agentfact::PromptLibrary::instance();
  for (const auto& id : library.ids()) {
    const auto& tmpl = library.get(id);
    {
      std::ofstream out(out_dir / (id + ".system.txt"), std::ios::binary);
      out << tmpl.system_text;
    }
    {
      std::ofstream out(out_dir / (id + ".user.txt"), std::ios::binary);
      out << tmpl.user_skeleton;
    }
  }
  std::cout << "wrote " << library.ids().size() << " templates to " << out_dir.string() << "\n";
  return 0;
}
