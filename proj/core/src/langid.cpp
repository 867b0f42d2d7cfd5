#include "socio/langid.hpp"

#include <algorithm>
#include <cctype>

namespace socio::langid {

namespace {

std::size_t count_codepoints(const std::string& text) {
    std::size_t n = 0;
    for (unsigned char c : text) {
        if ((c & 0xc0) != 0x80) ++n;  // not a UTF-8 continuation byte
    }
    return n;
}

// Lowercases ASCII, maps digits and ASCII punctuation to spaces, collapses
// whitespace and pads both ends. Non-ASCII bytes pass through, so accented
// letters keep separating languages.
std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    out.push_back(' ');
    bool last_space = true;
    for (unsigned char c : text) {
        char mapped;
        if (c < 0x80) {
            if (std::isalpha(c)) {
                mapped = static_cast<char>(std::tolower(c));
            } else {
                mapped = ' ';
            }
        } else {
            mapped = static_cast<char>(c);
        }
        if (mapped == ' ') {
            if (last_space) continue;
            last_space = true;
        } else {
            last_space = false;
        }
        out.push_back(mapped);
    }
    if (!last_space) out.push_back(' ');
    return out;
}

}  // namespace

std::vector<std::string> ranked_trigrams(const std::string& text, std::size_t cap) {
    const std::string norm = normalize(text);
    std::map<std::string, std::size_t> counts;
    if (norm.size() >= 3) {
        for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
            // Skip windows starting inside a multi-byte sequence.
            if ((static_cast<unsigned char>(norm[i]) & 0xc0) == 0x80) continue;
            counts[norm.substr(i, 3)] += 1;
        }
    }
    std::vector<std::pair<std::string, std::size_t>> items(counts.begin(), counts.end());
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > cap) items.resize(cap);
    std::vector<std::string> out;
    out.reserve(items.size());
    for (auto& [gram, _] : items) out.push_back(std::move(gram));
    return out;
}

void LanguageIdentifier::add_profile(const std::string& code, const std::string& sample_text) {
    std::unordered_map<std::string, std::size_t> ranks;
    std::size_t rank = 0;
    for (auto& gram : ranked_trigrams(sample_text, kProfileSize)) {
        ranks.emplace(gram, rank++);
    }
    profiles_[code] = std::move(ranks);
}

Detection LanguageIdentifier::detect(const std::string& text) const {
    if (count_codepoints(text) < kMinCodepoints || profiles_.empty()) {
        return {"und", 0.0};
    }
    const std::vector<std::string> doc = ranked_trigrams(text, kProfileSize);
    if (doc.empty()) return {"und", 0.0};

    Detection best{"und", -1.0};
    for (const auto& [code, profile] : profiles_) {
        std::size_t distance = 0;
        for (std::size_t i = 0; i < doc.size(); ++i) {
            auto it = profile.find(doc[i]);
            if (it == profile.end()) {
                distance += kProfileSize;  // out-of-profile penalty
            } else {
                distance += (i > it->second) ? i - it->second : it->second - i;
            }
        }
        const double max_distance = static_cast<double>(doc.size()) * kProfileSize;
        const double score = 1.0 - static_cast<double>(distance) / max_distance;
        if (score > best.score) best = {code, score};
    }
    return best;
}

namespace {

struct Sample {
    const char* code;
    const char* text;
};

const Sample kSamples[] = {
    {"en",
     "The food was absolutely wonderful and the service was friendly. We ordered the "
     "grilled chicken with roasted vegetables and a slice of chocolate cake for dessert. "
     "I would definitely come back with my family because the prices were fair and the "
     "staff made us feel welcome. There is nothing better than a warm meal after a long "
     "day of work. The place was clean, the music was pleasant, and the waiter explained "
     "everything on the menu. My husband thought the soup of the day was the best he had "
     "ever tasted. We will tell all of our friends about this little restaurant around "
     "the corner. They open early in the morning and stay busy until late at night, which "
     "says a lot about the quality of what they serve."},
    {"fr",
     "La nourriture était absolument merveilleuse et le service très agréable. Nous avons "
     "commandé le poulet grillé avec des légumes et une part de gâteau au chocolat pour le "
     "dessert. Je reviendrai certainement avec ma famille parce que les prix étaient "
     "raisonnables et le personnel nous a bien accueillis. Il n'y a rien de mieux qu'un "
     "repas chaud après une longue journée de travail. L'endroit était propre, la musique "
     "douce, et le serveur nous a expliqué tout le menu. Mon mari a pensé que la soupe du "
     "jour était la meilleure qu'il ait jamais goûtée. Nous parlerons de ce petit "
     "restaurant à tous nos amis. Ils ouvrent tôt le matin et restent occupés jusque tard "
     "dans la nuit, ce qui en dit long sur la qualité de leur cuisine."},
    {"es",
     "La comida estaba absolutamente maravillosa y el servicio fue muy amable. Pedimos el "
     "pollo a la parrilla con verduras asadas y un trozo de pastel de chocolate para el "
     "postre. Sin duda volveré con mi familia porque los precios eran justos y el personal "
     "nos hizo sentir bienvenidos. No hay nada mejor que una comida caliente después de un "
     "largo día de trabajo. El lugar estaba limpio, la música era agradable y el camarero "
     "nos explicó todo el menú. Mi marido pensó que la sopa del día era la mejor que había "
     "probado. Hablaremos de este pequeño restaurante a todos nuestros amigos. Abren "
     "temprano por la mañana y siguen ocupados hasta tarde en la noche, lo que dice mucho "
     "de la calidad de lo que sirven."},
    {"de",
     "Das Essen war absolut wunderbar und der Service sehr freundlich. Wir bestellten das "
     "gegrillte Hähnchen mit geröstetem Gemüse und ein Stück Schokoladenkuchen zum "
     "Nachtisch. Ich werde bestimmt mit meiner Familie wiederkommen, weil die Preise fair "
     "waren und das Personal uns willkommen fühlen ließ. Es gibt nichts Besseres als eine "
     "warme Mahlzeit nach einem langen Arbeitstag. Das Lokal war sauber, die Musik "
     "angenehm, und der Kellner erklärte uns die ganze Karte. Mein Mann fand die "
     "Tagessuppe die beste, die er je gegessen hat. Wir werden allen unseren Freunden von "
     "diesem kleinen Restaurant erzählen. Sie öffnen früh am Morgen und bleiben bis spät "
     "in die Nacht beschäftigt, was viel über die Qualität ihrer Küche aussagt."},
    {"it",
     "Il cibo era assolutamente meraviglioso e il servizio molto cordiale. Abbiamo "
     "ordinato il pollo alla griglia con verdure arrostite e una fetta di torta al "
     "cioccolato per dessert. Tornerò sicuramente con la mia famiglia perché i prezzi "
     "erano giusti e il personale ci ha fatto sentire benvenuti. Non c'è niente di meglio "
     "di un pasto caldo dopo una lunga giornata di lavoro. Il locale era pulito, la musica "
     "piacevole e il cameriere ci ha spiegato tutto il menù. Mio marito ha pensato che la "
     "zuppa del giorno fosse la migliore che avesse mai assaggiato. Parleremo di questo "
     "piccolo ristorante a tutti i nostri amici. Aprono presto la mattina e restano "
     "occupati fino a tarda notte, il che dice molto sulla qualità della loro cucina."},
    {"pt",
     "A comida estava absolutamente maravilhosa e o serviço foi muito simpático. Pedimos o "
     "frango grelhado com legumes assados e uma fatia de bolo de chocolate para a "
     "sobremesa. Certamente voltarei com a minha família porque os preços eram justos e o "
     "pessoal nos fez sentir bem-vindos. Não há nada melhor do que uma refeição quente "
     "depois de um longo dia de trabalho. O lugar estava limpo, a música era agradável e o "
     "empregado explicou todo o cardápio. O meu marido achou que a sopa do dia era a "
     "melhor que já tinha provado. Vamos falar deste pequeno restaurante a todos os nossos "
     "amigos. Abrem cedo de manhã e continuam ocupados até tarde da noite, o que diz muito "
     "sobre a qualidade do que servem."},
    {"nl",
     "Het eten was absoluut heerlijk en de bediening was erg vriendelijk. We bestelden de "
     "gegrilde kip met geroosterde groenten en een stuk chocoladetaart als toetje. Ik kom "
     "zeker terug met mijn familie omdat de prijzen eerlijk waren en het personeel ons "
     "welkom liet voelen. Er is niets beters dan een warme maaltijd na een lange werkdag. "
     "De zaak was schoon, de muziek was aangenaam en de ober legde de hele kaart uit. Mijn "
     "man vond de soep van de dag de beste die hij ooit had geproefd. We zullen al onze "
     "vrienden over dit kleine restaurant vertellen. Ze openen vroeg in de ochtend en "
     "blijven tot laat in de avond bezig, wat veel zegt over de kwaliteit van hun keuken."},
};

}  // namespace

const LanguageIdentifier& LanguageIdentifier::bundled() {
    static const LanguageIdentifier instance = [] {
        LanguageIdentifier id;
        for (const auto& s : kSamples) id.add_profile(s.code, s.text);
        return id;
    }();
    return instance;
}

}  // namespace socio::langid
